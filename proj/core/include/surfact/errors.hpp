#pragma once

#include <stdexcept>

namespace surfact {

struct InvalidTwist : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NoSuchRoot : std::domain_error {
    using std::domain_error::domain_error;
};
struct BoundExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotHyperbolic : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct UnsupportedOrder : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotASubgroup : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct UnsupportedGenus : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct IndexOutOfRange : std::out_of_range {
    using std::out_of_range::out_of_range;
};
struct GroupMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct OrderMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotPrime : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct GenusTooSmall : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotAdmissible : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NonIntegralDimension : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct UnsupportedGroup : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace surfact
