#pragma once

// Golden CLI invocations shared by the unit suite and the acceptance run.
// Each case is executed twice: as written (text report) and with --json.

#include <string>
#include <vector>

struct CliCase {
  std::string name;
  std::vector<std::string> args;
  int exit_code;
};

inline const std::vector<CliCase>& cli_cases() {
  static const std::vector<CliCase> cases = {
      {"egz_solve_brute", {"egz-solve", "--modulus", "3", "--sequence", "1,1,1,2,2", "--algorithm", "brute"}, 0},
      {"egz_solve_dp", {"egz-solve", "--modulus", "3", "--sequence", "1,1,1,2,2", "--algorithm", "dp"}, 0},
      {"egz_solve_invariant", {"egz-solve", "--modulus", "2", "--sequence", "1,1,0", "--algorithm", "invariant"}, 0},
      {"egz_solve_absent", {"egz-solve", "--modulus", "3", "--sequence", "0,0,1,1"}, 1},
      {"egz_random", {"egz-random", "--modulus", "5", "--length", "9", "--seed", "1"}, 0},
      {"sg_generators", {"sg-generators", "--n", "4"}, 0},
      {"sg_generators_limited", {"sg-generators", "--n", "5", "--limit", "3"}, 0},
      {"sg_decompose", {"sg-decompose", "--n", "4", "--vector", "4,1,2,1"}, 0},
      {"sg_decompose_absent", {"sg-decompose", "--n", "3", "--vector", "2,1,0"}, 1},
      {"sg_saturation", {"sg-saturation", "--n", "3", "--max-degree", "2"}, 0},
      {"lat_index", {"lat-index", "--n", "3"}, 0},
      {"lat_coords", {"lat-coords", "--n", "3", "--vector", "3,0,0"}, 0},
      {"inv_enumerate", {"inv-enumerate", "--modulus", "2", "--weights", "1,1", "--degree", "2"}, 0},
      {"inv_factor", {"inv-factor", "--modulus", "2", "--weights", "1,1", "--exponents", "3,1"}, 0},
      {"inv_check", {"inv-check", "--modulus", "4", "--weights", "1,3", "--max-degree", "2"}, 0},
  };
  return cases;
}
