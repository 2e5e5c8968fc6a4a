#ifndef FOLCALC_ERRORS_HPP
#define FOLCALC_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace folcalc {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& msg) : Error(msg) {}
};

// Hard stop for symbolic computations that exceed their step or degree
// budget. `context` names the computation that blew up.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(const std::string& context_, const std::string& msg)
        : Error("budget exceeded in " + context_ + ": " + msg), context(context_) {}
    std::string context;
};

struct SourcePos {
    int line = 0;  // 1-based; 0 = unknown
    int col = 0;
};

class ParseError : public Error {
public:
    ParseError(SourcePos pos_, const std::string& msg)
        : Error("parse error at " + std::to_string(pos_.line) + ":" +
                std::to_string(pos_.col) + ": " + msg),
          pos(pos_), message(msg) {}
    SourcePos pos;
    std::string message;
};

class EvalError : public Error {
public:
    EvalError(SourcePos pos_, const std::string& msg)
        : Error("evaluation error at " + std::to_string(pos_.line) + ":" +
                std::to_string(pos_.col) + ": " + msg),
          pos(pos_), message(msg) {}
    SourcePos pos;
    std::string message;
};

struct Budget {
    // Reduction/pair steps across one Groebner-type computation.
    long long max_steps = 2'000'000;
    // Max total degree of any intermediate term.
    int max_degree = 64;
};

inline const Budget& default_budget() {
    static const Budget b{};
    return b;
}

}  // namespace folcalc

#endif
