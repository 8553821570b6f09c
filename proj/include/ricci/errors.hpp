#ifndef RICCI_ERRORS_HPP
#define RICCI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ricci {

// Base class for all domain errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct VertexOutOfRange : Error {
    int vertex;
    VertexOutOfRange(int v, int n)
        : Error("vertex " + std::to_string(v) + " out of range [0," + std::to_string(n) + ")"),
          vertex(v) {}
};

struct SelfLoop : Error {
    int vertex;
    explicit SelfLoop(int v) : Error("self-loop at vertex " + std::to_string(v)), vertex(v) {}
};

struct DuplicateEdge : Error {
    int u, v;
    DuplicateEdge(int a, int b)
        : Error("duplicate edge (" + std::to_string(a) + "," + std::to_string(b) + ")"),
          u(a), v(b) {}
};

struct NotAnEdge : Error {
    int u, v;
    NotAnEdge(int a, int b)
        : Error("(" + std::to_string(a) + "," + std::to_string(b) + ") is not an edge"),
          u(a), v(b) {}
};

struct IsolatedVertex : Error {
    int vertex;
    explicit IsolatedVertex(int v)
        : Error("vertex " + std::to_string(v) + " is isolated"), vertex(v) {}
};

struct AlphaOutOfRange : Error {
    explicit AlphaOutOfRange(const std::string& got)
        : Error("alpha must lie in [0,1], got " + got) {}
};

struct DisconnectedSupports : Error {
    DisconnectedSupports() : Error("measure supports are not in one connected component") {}
};

struct EmptyGraph : Error {
    EmptyGraph() : Error("graph has no edges") {}
};

struct DegreeTooLarge : Error {
    int vertex, degree;
    DegreeTooLarge(int v, int d)
        : Error("vertex " + std::to_string(v) + " has degree " + std::to_string(d) +
                " > 3; slot model undefined"),
          vertex(v), degree(d) {}
};

struct GirthTooSmall : Error {
    explicit GirthTooSmall(const std::string& what) : Error(what) {}
};

struct PreconditionViolated : Error {
    explicit PreconditionViolated(const std::string& what) : Error(what) {}
};

struct InvalidSpec : Error {
    explicit InvalidSpec(const std::string& what) : Error(what) {}
};

struct LimitExceeded : Error {
    explicit LimitExceeded(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace ricci

#endif  // RICCI_ERRORS_HPP
