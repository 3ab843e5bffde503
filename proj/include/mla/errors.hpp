#pragma once

#include <stdexcept>
#include <string>

namespace mla {

// Base for every failure the engine reports. Witness indices refer to
// element positions in the carrier the operation ran on.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class NotAssociative : public Error {
public:
    int x, y, z;
    NotAssociative(int x_, int y_, int z_)
        : Error("not associative at (" + std::to_string(x_) + "," + std::to_string(y_) +
                "," + std::to_string(z_) + ")"),
          x(x_), y(y_), z(z_) {}
};

class NoIdentity : public Error {
public:
    NoIdentity() : Error("no two-sided identity element") {}
};

class NoInverse : public Error {
public:
    int x;
    explicit NoInverse(int x_) : Error("no inverse for element " + std::to_string(x_)), x(x_) {}
};

class OrderTooLarge : public Error {
public:
    int order, cap;
    OrderTooLarge(int order_, int cap_)
        : Error("order " + std::to_string(order_) + " exceeds cap " + std::to_string(cap_)),
          order(order_), cap(cap_) {}
};

class NotASubgroup : public Error {
public:
    explicit NotASubgroup(const std::string& why) : Error("not a subgroup: " + why) {}
};

class NotNormal : public Error {
public:
    explicit NotNormal(const std::string& why) : Error("not a normal subgroup: " + why) {}
};

// First violated axiom of the defining identities, with the
// lexicographically first witness tuple. arity says how many of x,y,z
// are meaningful.
class AxiomViolationError : public Error {
public:
    int axiom;
    int x, y, z;
    int arity;
    AxiomViolationError(int axiom_, int x_, int y_, int z_, int arity_)
        : Error("identity " + std::to_string(axiom_) + " fails at x=" + std::to_string(x_) +
                (arity_ > 1 ? ", y=" + std::to_string(y_) + ", z=" + std::to_string(z_) : "")),
          axiom(axiom_), x(x_), y(y_), z(z_), arity(arity_) {}
};

class NotAnIdeal : public Error {
public:
    explicit NotAnIdeal(const std::string& why) : Error("not an ideal: " + why) {}
};

class NotCentral : public Error {
public:
    int witness;
    explicit NotCentral(int witness_)
        : Error("ideal element " + std::to_string(witness_) + " lies outside the group center"),
          witness(witness_) {}
};

class NotASubalgebra : public Error {
public:
    explicit NotASubalgebra(const std::string& why) : Error("not a subalgebra: " + why) {}
};

// Internal consistency failures: reachable only through engine bugs, never
// through bad user input on hypotheses that were checked.
class StarNotWellDefined : public Error {
public:
    explicit StarNotWellDefined(const std::string& why)
        : Error("induced star not well defined: " + why) {}
};

class CentralityLost : public Error {
public:
    explicit CentralityLost(const std::string& why)
        : Error("embedded ideal lost centrality: " + why) {}
};

class NotAHomomorphism : public Error {
public:
    std::string which;
    explicit NotAHomomorphism(const std::string& which_)
        : Error("the " + which_ + " map is not a homomorphism"), which(which_) {}
};

class VerificationFailed : public Error {
public:
    explicit VerificationFailed(const std::string& why) : Error("verification failed: " + why) {}
};

class UnknownTheoremId : public Error {
public:
    explicit UnknownTheoremId(const std::string& id) : Error("unknown theorem id: " + id) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& why) : Error(why) {}
};

class InvalidArgument : public Error {
public:
    explicit InvalidArgument(const std::string& why) : Error(why) {}
};

}  // namespace mla
