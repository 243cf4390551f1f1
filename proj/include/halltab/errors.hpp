#pragma once

#include <stdexcept>
#include <string>

namespace halltab {

/**
 * Base class for all library errors.  Everything thrown on purpose by
 * halltab derives from this, so callers can catch one type.
 */
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/** Malformed or inconsistent input: bad dimensions, out-of-range elements,
 *  non-permutations, invalid transversals or configurations. */
class invalid_input : public error {
public:
    explicit invalid_input(const std::string& what) : error(what) {}
};

/** An operation that requires non-empty members was given an empty one.
 *  Kept distinct from "no result exists" (which is an empty optional). */
class empty_member_error : public invalid_input {
public:
    explicit empty_member_error(const std::string& what) : invalid_input(what) {}
};

/** A theorem hypothesis does not hold for the given input (family size,
 *  shellability, m-range, witness property, ...).  The message names the
 *  failed hypothesis. */
class hypothesis_error : public invalid_input {
public:
    explicit hypothesis_error(const std::string& what) : invalid_input(what) {}
};

/** A brute-force oracle was asked to run beyond its configured bound. */
class oracle_limit_error : public error {
public:
    explicit oracle_limit_error(const std::string& what) : error(what) {}
};

} // namespace halltab
