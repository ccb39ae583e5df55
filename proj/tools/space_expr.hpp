#pragma once

#include <string>

namespace streamcert::tools {

// Evaluates a word budget such as "4*n*log2(n)" or "n^1.5 + 100".
// Supports + - * / ^, parentheses, numbers, n, log2, ln and sqrt.
double eval_space_expr(const std::string& expr, double n);

}  // namespace streamcert::tools
