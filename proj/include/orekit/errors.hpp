#ifndef OREKIT_ERRORS_HPP
#define OREKIT_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace orekit {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual const char* kind() const noexcept { return "Error"; }
};

// A pivot depends on a parameter whose vanishing has not been decided.
class CaseSplitRequired : public Error {
public:
    CaseSplitRequired(std::string factor)
        : Error("case split required on " + factor + " != 0"), factor_(std::move(factor)) {}
    const std::string& factor() const { return factor_; }
    const char* kind() const noexcept override { return "CaseSplitRequired"; }

private:
    std::string factor_;
};

class PivotNotInvertible : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "PivotNotInvertible"; }
};

class ResourceLimit : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "ResourceLimit"; }
};

class NotParametrizable : public Error {
public:
    NotParametrizable(std::string msg, std::vector<std::string> torsion)
        : Error(std::move(msg)), torsion_(std::move(torsion)) {}
    const std::vector<std::string>& torsion() const { return torsion_; }
    const char* kind() const noexcept override { return "NotParametrizable"; }

private:
    std::vector<std::string> torsion_;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "DimensionMismatch"; }
};

class UnsupportedDimension : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "UnsupportedDimension"; }
};

}  // namespace orekit

#endif
