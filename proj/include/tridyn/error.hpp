#pragma once

#include <stdexcept>
#include <string>

namespace tridyn {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidTriple : Error {
    using Error::Error;
};
struct KindMismatch : Error {
    using Error::Error;
};
struct DegenerateInput : Error {
    using Error::Error;
};
struct OutOfRange : Error {
    using Error::Error;
};
struct NoConvergence : Error {
    using Error::Error;
};
struct NotAFixedPoint : Error {
    using Error::Error;
};
struct InvalidQuadrangle : Error {
    using Error::Error;
};
struct DegenerateOutput : Error {
    using Error::Error;
};
struct OnBoundary : Error {
    using Error::Error;
};
struct IOError : Error {
    using Error::Error;
};

}  // namespace tridyn
