#pragma once

// Command dispatch: every checker and computation of the library behind a
// small argument-vector interface, with deterministic text or JSON output.
// Exit codes: 0 success, 1 failed check, 2 usage or parse error.

#include <json.hpp>
#include <map>
#include <string>
#include <vector>

#include "qru/diffops.hpp"
#include "qru/expr.hpp"
#include "qru/gauge.hpp"
#include "qru/invariant.hpp"
#include "qru/rmatrix.hpp"

namespace qru::cli {

struct CommandResult {
  int code = 0;
  std::string out;  // the structured document
  std::string err;  // diagnostics for failures
};

namespace detail {

using Json = nlohmann::ordered_json;

inline void render_text(const Json& j, const std::string& prefix, std::string& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      std::string key = prefix.empty() ? k : prefix + "." + k;
      if (v.is_object() || v.is_array()) {
        render_text(v, key, out);
      } else {
        out += key + ": " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
      }
    }
  } else if (j.is_array()) {
    std::string line;
    for (const auto& v : j) {
      if (!line.empty()) line += " ";
      line += v.is_string() ? v.get<std::string>() : v.dump();
    }
    out += prefix + ": " + line + "\n";
  }
}

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// catalog lookup, tolerant of labels spelled without underscores
inline const Representation& find_rep(const Field& f, const std::string& label) {
  auto strip = [](const std::string& s) {
    std::string r;
    for (char c : s)
      if (c != '_') r += c;
    return r;
  };
  for (const Representation& r : catalog(f))
    if (r.label == label || strip(r.label) == strip(label)) return r;
  throw Usage("unknown representation label '" + label + "'");
}

inline Json summand_counts(const DecompositionReport& rep) {
  std::map<std::string, long> counts;
  for (const Summand& s : rep.summands) {
    std::string l = s.label.empty() ? "indecomposable_" + std::to_string(s.rep.dim()) : s.label;
    ++counts[l];
  }
  Json j = Json::object();
  for (const auto& [l, n] : counts) j[l] = n;
  return j;
}

}  // namespace detail

inline CommandResult run(const std::vector<std::string>& args) {
  using detail::Json;
  long N = 3;
  std::string format = "text";
  std::vector<std::string> pos;
  CommandResult res;

  auto fail_usage = [&](const std::string& msg) {
    res.code = 2;
    res.err = msg;
    return res;
  };

  for (size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    auto flag_value = [&](const std::string& name) -> std::string {
      if (a.size() > name.size() && a.compare(0, name.size() + 1, name + "=") == 0)
        return a.substr(name.size() + 1);
      if (++i >= args.size()) throw detail::Usage("missing value for " + name);
      return args[i];
    };
    try {
      if (a == "--N" || a.rfind("--N=", 0) == 0) {
        N = std::stol(flag_value("--N"));
      } else if (a == "--format" || a.rfind("--format=", 0) == 0) {
        format = flag_value("--format");
      } else if (a.rfind("--", 0) == 0) {
        return fail_usage("unknown flag " + a);
      } else {
        pos.push_back(a);
      }
    } catch (const std::exception& e) {
      return fail_usage(e.what());
    }
  }
  if (N < 3 || N % 2 == 0) return fail_usage("--N must be an odd integer >= 3");
  if (format != "text" && format != "json") return fail_usage("--format must be json or text");
  if (pos.empty())
    return fail_usage(
        "usage: qru <mul|normalize|check|decompose|radical|qdim|scalar-product|curvature|"
        "cohomology> ... [--N k] [--format json|text]");

  const Field& f = Field::get(N);
  std::string command = pos[0];
  Json doc;
  doc["command"] = command;
  doc["parameters"] = {{"N", N}, {"format", format}};
  Json payload = Json::object();
  bool check_failed = false;
  std::string fail_detail;

  auto run_checks = [&](std::vector<std::pair<std::string, CheckReport>> reports) {
    for (auto& [name, rep] : reports) {
      payload[name] = rep.ok ? "pass" : "fail";
      if (!rep.ok && !check_failed) {
        check_failed = true;
        fail_detail = rep.detail;
      }
    }
  };

  try {
    if (command == "mul" || command == "normalize") {
      size_t want = command == "mul" ? 4 : 3;
      if (pos.size() != want) throw detail::Usage(command + ": wrong number of arguments");
      const std::string& alg = pos[1];
      auto emit = [&](const std::string& text) {
        payload["algebra"] = alg;
        payload["result"] = text;
      };
      if (alg == "plane") {
        Plane r = parse_plane(f, pos[2]);
        if (command == "mul") r = r * parse_plane(f, pos[3]);
        emit(format_plane(r));
      } else if (alg == "H") {
        HEl r = parse_h(f, pos[2]);
        if (command == "mul") r = r * parse_h(f, pos[3]);
        emit(format_h(r));
      } else if (alg == "F") {
        FEl r = parse_f(f, pos[2]);
        if (command == "mul") r = r * parse_f(f, pos[3]);
        emit(format_f(r));
      } else if (alg == "wz") {
        WZEl r = parse_wz(f, pos[2]);
        if (command == "mul") r = r * parse_wz(f, pos[3]);
        emit(format_wz(r));
      } else {
        throw detail::Usage("unknown algebra '" + alg + "' (plane, H, F, wz)");
      }
    } else if (command == "check") {
      if (pos.size() != 2) throw detail::Usage("check: expected one subject");
      const std::string& what = pos[1];
      if (what == "hopf") {
        run_checks({{"H", check_hopf_axioms_h(f)}, {"F", check_hopf_axioms_f(f)}});
      } else if (what == "module-algebra") {
        run_checks({{"module-algebra", check_module_algebra(f)},
                    {"inverse-mapping", check_inverse_mapping(f)}});
      } else if (what == "stars") {
        run_checks(
            {{"star-covariance", check_star_covariance(f)}, {"twisted-star", check_twisted_star(f)}});
      } else if (what == "wz") {
        run_checks({{"wz", check_wz(f)}});
      } else if (what == "diffops") {
        run_checks({{"diffops", check_diffops(f)}, {"invariant-ops", check_invariant_ops(f)}});
      } else if (what == "rmatrix") {
        run_checks({{"rmatrix", check_rmatrix(f)}});
      } else {
        throw detail::Usage("unknown check '" + what + "'");
      }
    } else if (command == "decompose") {
      if (pos.size() < 2) throw detail::Usage("decompose: expected M, omega1 or tensor");
      const std::string& what = pos[1];
      if (what == "M") {
        for (const MSummand& s : decompose_M(f)) {
          std::string label = s.irreducible
                                  ? std::to_string(f.N) + "_irr"
                                  : std::to_string(f.N) + "_" + std::to_string(s.inv_subspace_dim);
          Json part;
          part["dim"] = f.N;
          part["class"] = s.cls;
          part["irreducible"] = s.irreducible;
          if (!s.irreducible) part["invariant_subspace_dim"] = s.inv_subspace_dim;
          payload[label] = part;
        }
      } else if (what == "omega1") {
        payload =
            detail::summand_counts(decompose_rep(omega1_rep(f), catalog(f), /*allow_unknown=*/true));
      } else if (what == "tensor") {
        if (pos.size() != 4) throw detail::Usage("decompose tensor: expected two labels");
        Representation t =
            Representation::tensor(detail::find_rep(f, pos[2]), detail::find_rep(f, pos[3]));
        payload = detail::summand_counts(decompose_rep(t));
      } else {
        throw detail::Usage("unknown decomposition target '" + what + "'");
      }
    } else if (command == "radical") {
      const RegularData& rd = RegularData::get(f);
      payload["dim"] = rd.radical_basis.cols();
      payload["blocks"] = rd.blocks;
    } else if (command == "qdim") {
      if (pos.size() != 2) throw detail::Usage("qdim: expected a representation label");
      payload["label"] = detail::find_rep(f, pos[1]).label;
      payload["qdim"] = qdim(detail::find_rep(f, pos[1])).str();
    } else if (command == "scalar-product") {
      if (pos.size() == 1) {
        run_checks({{"invariant-product", check_plane_product(f)}});
      } else if (pos.size() == 3) {
        Plane z = parse_plane(f, pos[1]), w = parse_plane(f, pos[2]);
        payload["result"] = scalar_product(z, w).str();
      } else {
        throw detail::Usage("scalar-product: expected zero or two plane expressions");
      }
    } else if (command == "curvature") {
      if (pos.size() != 2) throw detail::Usage("curvature: expected a one-form expression");
      WZEl omega = parse_wz(f, pos[1]);
      if (!omega.homogeneous(1)) throw detail::Usage("curvature: the expression is not a one-form");
      payload["result"] = format_wz(curvature(omega));
    } else if (command == "cohomology") {
      Cohomology h = wz_cohomology(f);
      payload["h0"] = h.h0;
      payload["h1"] = h.h1;
      payload["h2"] = h.h2;
    } else {
      throw detail::Usage("unknown command '" + command + "'");
    }
  } catch (const detail::Usage& e) {
    return fail_usage(e.what());
  } catch (const ParseError& e) {
    return fail_usage(e.what());
  } catch (const std::invalid_argument& e) {
    return fail_usage(e.what());
  }

  doc["status"] = check_failed ? "fail" : "ok";
  doc["payload"] = payload;
  if (format == "json") {
    res.out = doc.dump(2) + "\n";
  } else {
    detail::render_text(doc, "", res.out);
  }
  if (check_failed) {
    res.code = 1;
    res.err = fail_detail;
  }
  return res;
}

}  // namespace qru::cli
