#ifndef G1JAC_SELFCHECK_HPP
#define G1JAC_SELFCHECK_HPP

#include <iosfwd>

namespace g1jac {

// Runs the built-in verification suite with every per-degree loop capped at
// n_max, printing one PASS/FAIL line per criterion.  Returns true iff all
// criteria pass.  All checks are exact.
bool run_selfcheck(int n_max, std::ostream& os);

}  // namespace g1jac

#endif
