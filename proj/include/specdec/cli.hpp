#pragma once

// The `specdec` command line front end as a library call, so that it can be
// driven from tests.

#include <ostream>
#include <string>
#include <vector>

namespace specdec::cli {

// `args` excludes the program name. Returns 0 on success, 1 when a property
// or axiom check failed (the counterexample is in the report), 2 on input
// errors and capped orders.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace specdec::cli
