#pragma once

#include <stdexcept>
#include <string>

namespace yangian {

// Base for every error raised by the library. Most of these signal a violated
// theorem-level identity, which means a bug rather than bad input.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class invalid_type : public error {
public:
    using error::error;
};

class non_exact_division : public error {
public:
    using error::error;
};

class not_taylor : public error {
public:
    using error::error;
};

class negative_coefficient : public error {
public:
    using error::error;
};

class support_violation : public error {
public:
    using error::error;
};

class unsupported_type : public error {
public:
    using error::error;
};

class irrational_pole : public error {
public:
    using error::error;
};

class pole_mismatch : public error {
public:
    using error::error;
};

class chain_stuck : public error {
public:
    using error::error;
};

class not_same_degree : public error {
public:
    using error::error;
};

} // namespace yangian
