#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace imst {

// Input text could not be parsed. line() is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

// No admissible spanning tree exists for the request: the graph is
// disconnected, or the imposed edges close a cycle. When a cycle is the
// cause, cycle_edges() lists its edge ids.
class InfeasibleError : public std::runtime_error {
public:
    explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}

    InfeasibleError(const std::string& what, std::vector<int> cycle_edges)
        : std::runtime_error(what), cycle_edges_(std::move(cycle_edges)) {}

    const std::vector<int>& cycle_edges() const { return cycle_edges_; }

private:
    std::vector<int> cycle_edges_;
};

// An enumeration cap was hit before the computation finished.
class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace imst
