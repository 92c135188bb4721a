#include "egzkit/cli.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "egzkit/errors.hpp"
#include "egzkit/invariants.hpp"
#include "egzkit/lattice.hpp"
#include "egzkit/rng.hpp"
#include "egzkit/semigroup.hpp"

namespace egzkit::cli {

using nlohmann::json;

std::string to_string(Status s) {
  switch (s) {
    case Status::Ok: return "ok";
    case Status::Absent: return "absent";
    case Status::Failed: return "failed";
  }
  return "failed";
}

Status status_from_string(const std::string& s) {
  if (s == "ok") return Status::Ok;
  if (s == "absent") return Status::Absent;
  if (s == "failed") return Status::Failed;
  throw UsageError("unknown status '" + s + "'");
}

ExitCode exit_code_for(Status s) { return s == Status::Ok ? ExitCode::Ok : ExitCode::NegativeResult; }

namespace {

const char* const kFixedKeys[] = {"version", "subcommand", "status", "inputs"};

bool is_fixed_key(const std::string& k) {
  for (const char* f : kFixedKeys) {
    if (k == f) return true;
  }
  return false;
}

json vec_json(const IntVec& v) { return json(v.values()); }

json vecs_json(const std::vector<IntVec>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(vec_json(v));
  return a;
}

json monomials_json(const std::vector<Monomial>& ms) {
  json a = json::array();
  for (const auto& m : ms) a.push_back(m.exponents());
  return a;
}

std::string scalar_text(const json& v) {
  if (v.is_null()) return "none";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

bool all_scalars(const json& a) {
  for (const auto& e : a) {
    if (e.is_structured()) return false;
  }
  return true;
}

void text_value(std::ostream& os, const std::string& label, const json& v) {
  if (v.is_array() && v.empty()) {
    os << label << ": []\n";
  } else if (v.is_array() && all_scalars(v)) {
    os << label << ":";
    for (const auto& e : v) os << ' ' << scalar_text(e);
    os << '\n';
  } else if (v.is_array()) {
    os << label << ": " << v.size() << (v.size() == 1 ? " entry" : " entries") << '\n';
    for (const auto& e : v) {
      os << "  -";
      if (e.is_array()) {
        for (const auto& x : e) os << ' ' << scalar_text(x);
      } else {
        os << ' ' << scalar_text(e);
      }
      os << '\n';
    }
  } else {
    os << label << ": " << scalar_text(v) << '\n';
  }
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::optional<std::int64_t> parse_int(const std::string& tok) {
  std::int64_t v = 0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  if (first != last && *first == '+') ++first;
  auto [p, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || p != last || first == last) return std::nullopt;
  return v;
}

}  // namespace

json to_json(const Report& r) {
  json j = r.payload.is_object() ? r.payload : json::object();
  j["version"] = r.version;
  j["subcommand"] = r.subcommand;
  j["status"] = to_string(r.status);
  j["inputs"] = r.inputs;
  return j;
}

Report report_from_json(const json& j) {
  if (!j.is_object()) throw UsageError("report must be a JSON object");
  for (const char* k : kFixedKeys) {
    if (!j.contains(k)) throw UsageError(std::string("report is missing '") + k + "'");
  }
  Report r;
  r.version = j.at("version").get<std::string>();
  r.subcommand = j.at("subcommand").get<std::string>();
  r.status = status_from_string(j.at("status").get<std::string>());
  r.inputs = j.at("inputs");
  for (const auto& [k, v] : j.items()) {
    if (!is_fixed_key(k)) r.payload[k] = v;
  }
  return r;
}

std::string render_json(const Report& r) { return to_json(r).dump() + "\n"; }

std::string render_text(const Report& r) {
  std::ostringstream os;
  os << r.subcommand << ": " << to_string(r.status) << '\n';
  for (const auto& [k, v] : r.inputs.items()) text_value(os, "input " + k, v);
  for (const auto& [k, v] : r.payload.items()) text_value(os, k, v);
  return os.str();
}

std::vector<std::int64_t> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  std::size_t index = 1;
  for (;;) {
    const auto comma = text.find(',', pos);
    const std::string tok = trim(text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
    const auto v = parse_int(tok);
    if (!v) {
      throw UsageError(what + ": token " + std::to_string(index) + " ('" + tok + "') is not an integer");
    }
    out.push_back(*v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
    ++index;
  }
  return out;
}

ResidueSequence parse_sequence_input(std::int64_t modulus, const std::optional<std::string>& inline_list,
                                     const std::optional<std::string>& file) {
  if (modulus < 1) throw UsageError("--modulus must be >= 1");
  if (inline_list.has_value() == file.has_value()) {
    throw UsageError("give exactly one of --sequence or --input");
  }
  std::vector<std::int64_t> values;
  if (inline_list) {
    values = parse_int_list(*inline_list, "--sequence");
  } else {
    std::ifstream in(*file);
    if (!in) throw UsageError("cannot read input file '" + *file + "'");
    std::string line;
    for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
      if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      const std::string tok = trim(line);
      if (tok.empty()) continue;
      const auto v = parse_int(tok);
      if (!v) throw UsageError(*file + ":" + std::to_string(lineno) + ": '" + tok + "' is not an integer");
      values.push_back(*v);
    }
  }
  if (values.empty()) throw UsageError("sequence is empty");
  return ResidueSequence(modulus, std::move(values));
}

int guarded(const std::string& subcommand, const json& inputs, bool json_mode, const std::function<Report()>& body,
            std::ostream& out, std::ostream& err) {
  try {
    const Report r = body();
    out << (json_mode ? render_json(r) : render_text(r));
    return static_cast<int>(exit_code_for(r.status));
  } catch (const ContradictionError& e) {
    err << "egzkit: internal contradiction in " << subcommand << ": " << e.what()
        << "; please report with inputs " << inputs.dump() << '\n';
    return static_cast<int>(ExitCode::Contradiction);
  } catch (const std::exception& e) {
    err << "egzkit: " << subcommand << ": " << e.what() << '\n';
    return static_cast<int>(ExitCode::Usage);
  }
}

namespace {

struct Args {
  std::int64_t n = 0;
  std::optional<std::string> sequence;
  std::optional<std::string> input;
  std::string algorithm = "dp";
  std::int64_t length = 0;
  std::uint64_t seed = 0;
  std::string vector;
  std::string weights;
  std::string exponents;
  std::int64_t degree = 0;
  std::int64_t max_degree = 0;
  std::int64_t limit = kDefaultLimit;
  std::uint64_t max_candidates = kDefaultMaxCandidates;
  bool json_mode = false;
};

json witness_json(const std::optional<ZeroSumWitness>& w) {
  if (!w) return nullptr;
  return json(w->indices);
}

Report make(const std::string& sub, const json& inputs) {
  Report r;
  r.subcommand = sub;
  r.inputs = inputs;
  return r;
}

IntVec vector_arg(const Args& a) {
  auto coords = parse_int_list(a.vector, "--vector");
  if (static_cast<std::int64_t>(coords.size()) != a.n) {
    throw UsageError("--vector has " + std::to_string(coords.size()) + " entries, expected " + std::to_string(a.n));
  }
  return IntVec(a.n, std::move(coords));
}

WeightVector weights_arg(const Args& a) { return WeightVector(a.n, parse_int_list(a.weights, "--weights")); }

void require_positive(std::int64_t v, const char* flag) {
  if (v < 1) throw UsageError(std::string(flag) + " must be >= 1");
}

int dispatch(const std::string& sub, const Args& a, std::ostream& out, std::ostream& err) {
  json inputs = json::object();
  std::function<Report()> body;
  try {
    if (sub == "egz-solve") {
      const ResidueSequence seq = parse_sequence_input(a.n, a.sequence, a.input);
      inputs = {{"modulus", a.n}, {"sequence", seq.elements()}, {"algorithm", a.algorithm}};
      if (a.algorithm != "brute" && a.algorithm != "dp" && a.algorithm != "invariant") {
        throw UsageError("--algorithm must be brute, dp or invariant");
      }
      body = [&a, seq, inputs] {
        Report r = make("egz-solve", inputs);
        if (a.algorithm == "invariant") {
          const auto tr = solve_invariant_route_traced(seq);
          r.payload = {{"witness", tr.witness.indices},
                       {"appended", tr.appended},
                       {"multiplicities", vec_json(tr.multiplicities)},
                       {"factors", vecs_json(tr.factors)},
                       {"selected", tr.selected}};
          return r;
        }
        const auto w = a.algorithm == "brute" ? solve_brute(seq) : solve_dp(seq);
        if (w && !is_valid_witness(seq, *w)) throw ContradictionError("solver returned an invalid witness");
        r.status = w ? Status::Ok : Status::Absent;
        r.payload = {{"witness", witness_json(w)}};
        return r;
      };
    } else if (sub == "egz-random") {
      require_positive(a.n, "--modulus");
      require_positive(a.length, "--length");
      inputs = {{"modulus", a.n}, {"length", a.length}, {"seed", a.seed}, {"generator", SequenceRng::kName}};
      body = [&a, inputs] {
        Report r = make("egz-random", inputs);
        r.payload = {{"sequence", random_sequence(a.n, static_cast<std::size_t>(a.length), a.seed).elements()}};
        return r;
      };
    } else if (sub == "sg-generators") {
      require_positive(a.n, "--n");
      inputs = {{"n", a.n}, {"limit", a.limit}};
      body = [&a, inputs] {
        Report r = make("sg-generators", inputs);
        const auto gens = enumerate_generators(a.n);
        const auto keep = std::min<std::size_t>(gens.size(), static_cast<std::size_t>(std::max<std::int64_t>(a.limit, 0)));
        r.payload = {{"count", gens.size()},
                     {"generators", vecs_json({gens.vectors().begin(), gens.vectors().begin() + static_cast<std::ptrdiff_t>(keep)})},
                     {"truncated", keep < gens.size()}};
        return r;
      };
    } else if (sub == "sg-decompose") {
      require_positive(a.n, "--n");
      const IntVec x = vector_arg(a);
      inputs = {{"n", a.n}, {"vector", x.values()}};
      body = [x, inputs] {
        Report r = make("sg-decompose", inputs);
        const auto dec = decompose_in_semigroup(x);
        r.status = dec ? Status::Ok : Status::Absent;
        r.payload = {{"degree", dec ? json(dec->degree()) : json(nullptr)},
                     {"parts", dec ? vecs_json(dec->parts) : json(nullptr)}};
        return r;
      };
    } else if (sub == "sg-saturation") {
      require_positive(a.n, "--n");
      require_positive(a.max_degree, "--max-degree");
      inputs = {{"n", a.n}, {"max_degree", a.max_degree}, {"max_candidates", a.max_candidates}};
      body = [&a, inputs] {
        Report r = make("sg-saturation", inputs);
        const auto rep = check_saturation(a.n, a.max_degree, a.max_candidates);
        r.status = rep.ok() ? Status::Ok : Status::Failed;
        r.payload = {{"degrees_checked", rep.degrees_checked},
                     {"candidates_per_degree", rep.candidates_per_degree},
                     {"failures", vecs_json(rep.failures)}};
        return r;
      };
    } else if (sub == "lat-index") {
      inputs = {{"n", a.n}};
      body = [&a, inputs] {
        Report r = make("lat-index", inputs);
        const auto basis = u_basis(a.n);
        const auto snf = lattice_index(basis);
        r.payload = {{"basis", vecs_json(basis.rows())}, {"diagonal", snf.diagonal}, {"index", snf.index}};
        return r;
      };
    } else if (sub == "lat-coords") {
      require_positive(a.n, "--n");
      const IntVec x = vector_arg(a);
      inputs = {{"n", a.n}, {"vector", x.values()}};
      body = [x, inputs] {
        Report r = make("lat-coords", inputs);
        const auto d = to_u_coordinates(x);
        if (u_basis(x.modulus()).combine(d) != x) throw ContradictionError("u-coordinates do not reconstruct the input");
        r.payload = {{"coordinates", d}};
        return r;
      };
    } else if (sub == "inv-enumerate") {
      const WeightVector wv = weights_arg(a);
      inputs = {{"modulus", a.n}, {"weights", wv.weights()}, {"degree", a.degree}, {"limit", a.limit},
                {"max_candidates", a.max_candidates}};
      body = [&a, wv, inputs] {
        Report r = make("inv-enumerate", inputs);
        auto monos = enumerate_invariant_monomials(wv, a.degree, a.max_candidates);
        const std::size_t total = monos.size();
        const auto keep = std::min<std::size_t>(total, static_cast<std::size_t>(std::max<std::int64_t>(a.limit, 0)));
        monos.resize(keep, monos.empty() ? Monomial({}, wv) : monos.front());
        r.payload = {{"count", total}, {"monomials", monomials_json(monos)}, {"truncated", keep < total}};
        return r;
      };
    } else if (sub == "inv-factor") {
      const WeightVector wv = weights_arg(a);
      const Monomial mono(parse_int_list(a.exponents, "--exponents"), wv);
      inputs = {{"modulus", a.n}, {"weights", wv.weights()}, {"exponents", mono.exponents()}};
      body = [wv, mono, inputs] {
        Report r = make("inv-factor", inputs);
        const auto factors = factor_invariant(mono, wv);
        r.payload = {{"class_multiplicities", vec_json(class_multiplicities(mono, wv))},
                     {"factors", monomials_json(factors)}};
        return r;
      };
    } else if (sub == "inv-check") {
      require_positive(a.max_degree, "--max-degree");
      const WeightVector wv = weights_arg(a);
      inputs = {{"modulus", a.n}, {"weights", wv.weights()}, {"max_degree", a.max_degree},
                {"max_candidates", a.max_candidates}};
      body = [&a, wv, inputs] {
        Report r = make("inv-check", inputs);
        const auto rep = check_degree_one_generation(wv, a.max_degree, a.max_candidates);
        r.status = rep.ok() ? Status::Ok : Status::Failed;
        r.payload = {{"degrees_checked", rep.degrees_checked},
                     {"candidates_per_degree", rep.candidates_per_degree},
                     {"failures", monomials_json(rep.failures)}};
        return r;
      };
    } else {
      throw UsageError("unknown subcommand '" + sub + "'");
    }
  } catch (const std::exception& e) {
    err << "egzkit: " << sub << ": " << e.what() << '\n';
    return static_cast<int>(ExitCode::Usage);
  }
  return guarded(sub, inputs, a.json_mode, body, out, err);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zero-sum semigroups, cyclic invariants and constructive EGZ", "egzkit"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  Args a;

  auto json_flag = [&](CLI::App* s) { s->add_flag("--json", a.json_mode, "Emit a JSON report"); };
  auto modulus = [&](CLI::App* s) { s->add_option("--n,--modulus", a.n, "Modulus n (group order)")->required(); };
  auto ceiling = [&](CLI::App* s) {
    s->add_option("--max-candidates", a.max_candidates, "Abort if more candidates would be scanned")
        ->capture_default_str();
  };
  auto limit = [&](CLI::App* s) {
    s->add_option("--limit", a.limit, "Maximum number of listed items")->capture_default_str();
  };

  auto* solve = app.add_subcommand("egz-solve", "Find n elements summing to 0 mod n");
  modulus(solve);
  solve->add_option("--sequence", a.sequence, "Comma-separated integers");
  solve->add_option("--input", a.input, "File with one integer per line");
  solve->add_option("--algorithm", a.algorithm, "brute | dp | invariant")->capture_default_str();
  json_flag(solve);

  auto* random = app.add_subcommand("egz-random", "Reproducible random residue sequence");
  modulus(random);
  random->add_option("--length,--m", a.length, "Sequence length")->required();
  random->add_option("--seed", a.seed, "64-bit seed")->required();
  json_flag(random);

  auto* gens = app.add_subcommand("sg-generators", "List the degree-n zero-weight compositions");
  modulus(gens);
  limit(gens);
  json_flag(gens);

  auto* dec = app.add_subcommand("sg-decompose", "Write a vector as a sum of generators");
  modulus(dec);
  dec->add_option("--vector", a.vector, "Comma-separated nonnegative integers")->required();
  json_flag(dec);

  auto* sat = app.add_subcommand("sg-saturation", "Exhaustive graded-generation audit");
  modulus(sat);
  sat->add_option("--max-degree", a.max_degree, "Largest degree d to check")->required();
  ceiling(sat);
  json_flag(sat);

  auto* idx = app.add_subcommand("lat-index", "Index of the kernel basis via Smith normal form");
  modulus(idx);
  json_flag(idx);

  auto* coords = app.add_subcommand("lat-coords", "Coordinates of a kernel vector in the kernel basis");
  modulus(coords);
  coords->add_option("--vector", a.vector, "Comma-separated integers")->required();
  json_flag(coords);

  auto* inv_enum = app.add_subcommand("inv-enumerate", "List invariant monomials of a degree");
  modulus(inv_enum);
  inv_enum->add_option("--weights", a.weights, "Comma-separated character weights")->required();
  inv_enum->add_option("--degree", a.degree, "Monomial degree")->required();
  limit(inv_enum);
  ceiling(inv_enum);
  json_flag(inv_enum);

  auto* inv_factor = app.add_subcommand("inv-factor", "Split an invariant monomial into degree-n invariants");
  modulus(inv_factor);
  inv_factor->add_option("--weights", a.weights, "Comma-separated character weights")->required();
  inv_factor->add_option("--exponents", a.exponents, "Comma-separated exponents")->required();
  json_flag(inv_factor);

  auto* inv_check = app.add_subcommand("inv-check", "Factor every invariant of degree d*n, d <= max");
  modulus(inv_check);
  inv_check->add_option("--weights", a.weights, "Comma-separated character weights")->required();
  inv_check->add_option("--max-degree", a.max_degree, "Largest d to check")->required();
  ceiling(inv_check);
  json_flag(inv_check);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "egzkit: " << e.what() << '\n';
    return static_cast<int>(ExitCode::Usage);
  }

  const auto chosen = app.get_subcommands();
  return dispatch(chosen.front()->get_name(), a, out, err);
}

}  // namespace egzkit::cli
