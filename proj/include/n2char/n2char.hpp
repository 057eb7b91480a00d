#ifndef N2CHAR_N2CHAR_HPP
#define N2CHAR_N2CHAR_HPP

#include "n2char/embeddings.hpp"
#include "n2char/errors.hpp"
#include "n2char/exact_rank.hpp"
#include "n2char/modes.hpp"
#include "n2char/nsmodules.hpp"
#include "n2char/qseries.hpp"
#include "n2char/rational.hpp"
#include "n2char/serialize.hpp"
#include "n2char/shapovalov.hpp"
#include "n2char/straighten.hpp"

#endif // N2CHAR_N2CHAR_HPP
