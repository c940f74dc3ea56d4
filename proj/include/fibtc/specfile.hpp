#pragma once

// Line-oriented bundle description files:
//
//   # comment
//   [bundle]
//   field = R            # R, C or H
//   rank = 5             # n + 1
//
//   [base]               # omit for a point
//   coefficients = f2    # f2 or z; default f2 for R, z for C and H
//   generators = x:1, y:2
//   relation = x^4       # repeatable
//   relations = y^2, x*y # comma separated
//   truncation = 6
//   strategy = tower     # tower or groebner
//
//   [classes]
//   w1 = x
//   w2 = x^2
//
//   [options]
//   kmax = 20
//   coefficients = f2    # criteria coefficients; default runs every valid one
//
// Keys may appear in any order within their section; every problem is
// reported as "path:line: message".

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "fibtc/bundles.hpp"

namespace fibtc {

class SpecError : public std::runtime_error {
public:
    SpecError(const std::string& path, int line, const std::string& message);

    int line() const { return line_; }

private:
    int line_;
};

struct SpecFile {
    std::string path;
    BundleSpec bundle;
    std::optional<int> k_max;
    std::optional<CoefficientRing> coefficients;
};

SpecFile parse_spec(std::string_view text, const std::string& path = "<input>");
SpecFile load_spec(const std::string& path);

std::optional<CoefficientRing> parse_coefficients(std::string_view s);

}  // namespace fibtc
