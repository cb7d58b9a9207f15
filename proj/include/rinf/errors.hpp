#pragma once

#include <stdexcept>
#include <string>

namespace rinf {

/// Base class for all library errors. Each condition named in an operation
/// contract gets its own type so callers can catch precisely.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

// calculus
class NonFinite : public Error {
public:
    using Error::Error;
};

// sphere
class PoleProximity : public Error {
public:
    using Error::Error;
};
class NotInCodomain : public Error {
public:
    using Error::Error;
};
class ZeroInput : public Error {
public:
    using Error::Error;
};
class RayExcluded : public Error {
public:
    using Error::Error;
};

// frames
class RankDeficient : public Error {
public:
    using Error::Error;
};
class NotOrthonormal : public Error {
public:
    using Error::Error;
};

// glinf
class Singular : public Error {
public:
    using Error::Error;
};
class OutsideChart : public Error {
public:
    explicit OutsideChart(const std::string& what, long index = -1)
        : Error(what), index_(index) {}
    /// Grid index that violated the chart domain, or -1 when not applicable.
    long index() const { return index_; }

private:
    long index_;
};
class UnsupportedOrder : public Error {
public:
    using Error::Error;
};

// mapspace
class CutLocus : public Error {
public:
    using Error::Error;
};
class OutsideDomain : public Error {
public:
    using Error::Error;
};
class NotDiffeo : public Error {
public:
    using Error::Error;
};
class FlowBreakdown : public Error {
public:
    using Error::Error;
};

// cli
class UnknownSuite : public Error {
public:
    using Error::Error;
};
class UnknownDemo : public Error {
public:
    using Error::Error;
};

}  // namespace rinf
