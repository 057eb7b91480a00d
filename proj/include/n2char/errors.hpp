#ifndef N2CHAR_ERRORS_HPP
#define N2CHAR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace n2char {

class Error : public std::runtime_error
{
public:
	using std::runtime_error::runtime_error;
};

// Argument outside an operation's contract (invalid label, d < 2, a <= 0, ...).
class DomainError : public Error
{
public:
	using Error::Error;
};

class ParseError : public Error
{
public:
	using Error::Error;
};

// Asked for a coefficient at or beyond the truncation order of a series.
class TruncationError : public Error
{
public:
	using Error::Error;
};

// The adaptive summation window of a character did not settle.
class StabilizationFailure : public Error
{
public:
	using Error::Error;
};

class CentralChargeMismatch : public Error
{
public:
	using Error::Error;
};

class DecompositionFailure : public Error
{
public:
	using Error::Error;
};

} // namespace n2char

#endif // N2CHAR_ERRORS_HPP
