#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "torusjump/chaincx.hpp"
#include "torusjump/errors.hpp"
#include "torusjump/jumploci.hpp"
#include "torusjump/verify.hpp"

namespace tj = torusjump;

namespace {

mpq_class parse_rational(const std::string& s) {
  try {
    mpq_class q(s);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw tj::ParseError("bad rational number: " + s);
  }
}

tj::CoeffDomain parse_coeff(const std::string& s) {
  return tj::CoeffDomain::parse(s);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

long parse_long(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    long v = std::stol(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::logic_error&) {
    throw tj::ParseError("bad " + what + ": " + s);
  }
}

bool is_kind(const std::string& s) {
  for (const char* prefix :
       {"torus:", "wedge:", "surface:", "fox:", "tensor:", "twist:"})
    if (s.rfind(prefix, 0) == 0) return true;
  return false;
}

tj::GroupPresentation load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw tj::Error("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw tj::ParseError(path + ": " + e.what());
  }
  if (!j.is_object() || !j.contains("generators") ||
      !j["generators"].is_number_integer())
    throw tj::ParseError(path + ": expected {\"generators\": g, \"relators\": [...]}");
  int g = j["generators"].get<int>();
  std::vector<std::vector<int>> relators;
  if (j.contains("relators")) {
    if (!j["relators"].is_array())
      throw tj::ParseError(path + ": relators must be an array");
    for (const auto& r : j["relators"]) {
      if (r.is_string()) {
        relators.push_back(
            tj::GroupPresentation::word_from_string(r.get<std::string>()));
      } else if (r.is_array()) {
        std::vector<int> w;
        for (const auto& x : r) {
          if (!x.is_number_integer())
            throw tj::ParseError(path + ": relator letters must be integers");
          w.push_back(x.get<int>());
        }
        relators.push_back(std::move(w));
      } else {
        throw tj::ParseError(path +
                             ": each relator must be a word string or an "
                             "array of signed generator indices");
      }
    }
  }
  return tj::GroupPresentation::make(g, std::move(relators));
}

tj::FreeComplex make_complex(const std::string& spec,
                             const tj::CoeffDomain& coeff);

// torus:N, wedge:k, surface:g, or a file path; used where commas are already
// claimed by the outer kind.
tj::FreeComplex make_simple(const std::string& part,
                            const tj::CoeffDomain& coeff) {
  if (is_kind(part)) {
    if (part.rfind("tensor:", 0) == 0 || part.rfind("twist:", 0) == 0)
      throw tj::ParseError("nested " + part.substr(0, part.find(':')) +
                           " is not supported; generate it to a file first");
    return make_complex(part, coeff);
  }
  return tj::load_complex(part);
}

tj::FreeComplex make_complex(const std::string& spec,
                             const tj::CoeffDomain& coeff) {
  std::size_t colon = spec.find(':');
  if (colon == std::string::npos)
    throw tj::ParseError("bad generator kind: " + spec);
  std::string kind = spec.substr(0, colon);
  std::string rest = spec.substr(colon + 1);
  if (kind == "torus")
    return tj::koszul_torus(static_cast<int>(parse_long(rest, "torus size")),
                            coeff);
  if (kind == "wedge")
    return tj::wedge_of_circles(
        static_cast<int>(parse_long(rest, "circle count")), coeff);
  if (kind == "surface")
    return tj::surface_complex(static_cast<int>(parse_long(rest, "genus")),
                               coeff);
  if (kind == "fox") return tj::fox_complex(load_presentation(rest), coeff);
  if (kind == "tensor") {
    std::vector<std::string> parts = split(rest, ',');
    if (parts.size() < 2 || parts.size() > 3)
      throw tj::ParseError("tensor needs a,b or a,b,mode");
    tj::TensorMode mode = tj::TensorMode::Concatenate;
    if (parts.size() == 3) {
      if (parts[2] == "same")
        mode = tj::TensorMode::SameRing;
      else if (parts[2] == "concat")
        mode = tj::TensorMode::Concatenate;
      else
        throw tj::ParseError("tensor mode must be same or concat");
    }
    return tj::tensor_product(make_simple(parts[0], coeff),
                              make_simple(parts[1], coeff), mode);
  }
  if (kind == "twist") {
    std::vector<std::string> parts = split(rest, ',');
    if (parts.size() < 2)
      throw tj::ParseError("twist needs an input and one factor per variable");
    tj::FreeComplex base = make_simple(parts[0], coeff);
    std::vector<mpq_class> lambda;
    for (std::size_t i = 1; i < parts.size(); ++i)
      lambda.push_back(parse_rational(parts[i]));
    if (static_cast<int>(lambda.size()) != base.ring().num_vars())
      throw tj::ParseError("twist needs exactly " +
                           std::to_string(base.ring().num_vars()) +
                           " factors");
    return base.twisted(lambda);
  }
  throw tj::ParseError("unknown generator kind: " + kind);
}

tj::Caps resolve_caps(std::uint64_t flag_degree, std::size_t flag_basis) {
  tj::Caps caps;
  if (const char* env = std::getenv("TORUSJUMP_CAPS")) {
    for (const std::string& item : split(env, ',')) {
      if (item.empty()) continue;
      std::size_t eq = item.find('=');
      if (eq == std::string::npos)
        throw tj::ParseError("TORUSJUMP_CAPS entries must be key=value: " +
                             item);
      std::string key = item.substr(0, eq);
      long v = parse_long(item.substr(eq + 1), "TORUSJUMP_CAPS value");
      if (v <= 0)
        throw tj::ParseError("TORUSJUMP_CAPS values must be positive");
      if (key == "max_degree")
        caps.max_degree = static_cast<std::uint64_t>(v);
      else if (key == "max_basis")
        caps.max_basis = static_cast<std::size_t>(v);
      else if (key == "max_minors")
        caps.max_minors = static_cast<std::size_t>(v);
      else
        throw tj::ParseError("unknown TORUSJUMP_CAPS key: " + key);
    }
  }
  if (flag_degree) caps.max_degree = flag_degree;
  if (flag_basis) caps.max_basis = flag_basis;
  return caps;
}

// Shared input resolution: a generator kind or a complex file, with an
// optional coefficient override (reduction for files).
tj::FreeComplex resolve_input(const std::string& input,
                              const std::string& coeff_str,
                              bool coeff_explicit) {
  tj::CoeffDomain coeff = parse_coeff(coeff_str);
  if (is_kind(input)) return make_complex(input, coeff);
  tj::FreeComplex c = tj::load_complex(input);
  if (coeff_explicit && !(c.ring().coeff() == coeff))
    return c.reduce_coefficients(coeff);
  return c;
}

nlohmann::json loci_to_json(const tj::JumpLocusSet& l) {
  nlohmann::json loci = nlohmann::json::array();
  for (int d = l.lo(); d <= l.hi(); ++d) {
    const tj::DegreeLocus& rec = l.at(d);
    nlohmann::json gens = nlohmann::json::array();
    for (const tj::Polynomial& g : rec.ideal.generators())
      gens.push_back(g.to_string());
    loci.push_back({{"degree", d},
                    {"generators", gens},
                    {"rank_in", rec.ranks.rank_in},
                    {"rank_out", rec.ranks.rank_out},
                    {"rank_free", rec.ranks.rank_free},
                    {"dim", rec.dim.dim},
                    {"codim", rec.dim.codim},
                    {"whole_torus", rec.whole_torus},
                    {"empty", rec.empty}});
  }
  return {{"ring", l.ring().to_string()},
          {"lo", l.lo()},
          {"hi", l.hi()},
          {"reduced_from_integers", l.reduced_from_integers()},
          {"note",
           "varieties, not ideals, are the verified objects; generators are "
           "of the saturated jumping ideals"},
          {"loci", loci}};
}

std::string loci_to_text(const tj::JumpLocusSet& l) {
  std::ostringstream out;
  out << "ring: " << l.ring().to_string() << "  degrees " << l.lo() << ".."
      << l.hi() << "\n";
  if (l.reduced_from_integers())
    out << "note: integer coefficients reduced to rationals\n";
  out << "note: varieties, not ideals, are the verified objects; generators "
         "are of the saturated jumping ideals\n";
  for (int d = l.lo(); d <= l.hi(); ++d) {
    const tj::DegreeLocus& rec = l.at(d);
    out << "degree " << d << ": ";
    if (rec.whole_torus)
      out << "whole torus";
    else if (rec.empty)
      out << "empty";
    else
      out << "dim " << rec.dim.dim << ", codim " << rec.dim.codim;
    out << "  (ranks: in " << rec.ranks.rank_in << ", out "
        << rec.ranks.rank_out << ", free " << rec.ranks.rank_free << ")\n";
    if (!rec.ideal.generators().empty()) {
      out << "  generators:";
      for (const tj::Polynomial& g : rec.ideal.generators())
        out << " [" << g.to_string() << "]";
      out << "\n";
    }
  }
  return out.str();
}

std::string status_text(const tj::PropertyResult& r) {
  switch (r.status) {
    case tj::PropertyResult::Status::Pass:
      return "pass";
    case tj::PropertyResult::Status::Fail:
      return "FAIL";
    case tj::PropertyResult::Status::Skipped:
      return "skipped";
  }
  return "skipped";
}

std::string report_to_text(const tj::VerificationReport& rep) {
  std::ostringstream out;
  out << "mode: " << rep.mode_label << "\n";
  for (const auto& [key, res] : rep.properties)
    out << "(" << key << ") " << status_text(res) << ": " << res.witness
        << "\n";
  return out.str();
}

std::vector<tj::Ideal> load_components(const std::string& path,
                                       const tj::LaurentRing& ring) {
  std::ifstream in(path);
  if (!in) throw tj::Error("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw tj::ParseError(path + ": " + e.what());
  }
  if (!j.is_object() || !j.contains("components") ||
      !j["components"].is_array())
    throw tj::ParseError(path + ": expected {\"components\": [[...], ...]}");
  std::vector<tj::Ideal> out;
  for (const auto& comp : j["components"]) {
    if (!comp.is_array())
      throw tj::ParseError(path + ": each component is an array of strings");
    std::vector<tj::Polynomial> gens;
    for (const auto& s : comp) {
      if (!s.is_string())
        throw tj::ParseError(path + ": generators must be strings");
      gens.push_back(tj::Polynomial::parse(ring, s.get<std::string>()));
    }
    out.push_back(tj::Ideal(ring, std::move(gens)));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "jump loci of bounded free complexes over Laurent polynomial rings"};
  app.require_subcommand(1);

  std::string coeff_str = "qq";
  std::string format = "text";
  std::uint64_t flag_max_degree = 0;
  std::size_t flag_max_basis = 0;
  app.add_option("--coeff", coeff_str,
                 "coefficients: qq, zz, or fp:<prime>")
      ->capture_default_str();
  app.add_option("--format", format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--max-degree", flag_max_degree,
                 "degree cap for basis computations");
  app.add_option("--max-basis", flag_max_basis,
                 "basis size cap for basis computations");

  auto* gen = app.add_subcommand(
      "generate",
      "write a complex as canonical JSON: torus:<N>, wedge:<k>, surface:<g>, "
      "fox:<file>, tensor:<a>,<b>[,same|concat], twist:<input>,<q1>,...");
  std::string gen_kind;
  gen->add_option("kind", gen_kind, "generator kind")->required();

  auto* jumps = app.add_subcommand("jumps", "compute the saturated jump loci");
  std::string jumps_input;
  jumps->add_option("input", jumps_input, "complex file or generator kind")
      ->required();

  auto* vp = app.add_subcommand("verify-propagation",
                                "check the propagation properties");
  std::string vp_input, vp_mode = "perverse", vp_components;
  int vp_r = 0;
  vp->add_option("input", vp_input, "complex file or generator kind")
      ->required();
  vp->add_option("--mode", vp_mode, "perverse or space:<n>")
      ->capture_default_str();
  vp->add_option("--components", vp_components,
                 "JSON file with candidate components of the top locus");
  vp->add_option("--r", vp_r,
                 "semi-smallness defect for the Betti bounds (space mode)")
      ->capture_default_str();

  auto* ad = app.add_subcommand("abelian-duality",
                                "single-degree cohomology over QQ and F_p");
  std::string ad_input, ad_primes = "2,3,5,7,11,13";
  int ad_n = -1;
  bool ad_partial = false;
  ad->add_option("input", ad_input,
                 "integer complex file or generator kind")
      ->required();
  ad->add_option("--n", ad_n, "expected single degree (default: top degree)");
  ad->add_option("--primes", ad_primes, "comma-separated primes to test")
      ->capture_default_str();
  ad->add_flag("--partial", ad_partial,
               "label a positive verdict as partial (the ring variables "
               "cover only part of the abelianization)");

  auto* orc = app.add_subcommand(
      "oracle", "compare locus membership against fiber dimensions");
  std::string orc_input;
  std::uint64_t orc_seed = tj::SamplePlan{}.seed;
  orc->add_option("input", orc_input, "complex file or generator kind")
      ->required();
  orc->add_option("--seed", orc_seed, "sampling seed")->capture_default_str();

  // Global options may appear after the subcommand name.
  for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    tj::Caps caps = resolve_caps(flag_max_degree, flag_max_basis);
    bool coeff_explicit = app.count("--coeff") > 0;
    bool json_out = format == "json";

    if (gen->parsed()) {
      tj::FreeComplex c = make_complex(gen_kind, parse_coeff(coeff_str));
      std::cout << tj::complex_to_canonical_text(c);
      return 0;
    }

    if (jumps->parsed()) {
      tj::FreeComplex c = resolve_input(jumps_input, coeff_str, coeff_explicit);
      tj::JumpLocusSet l = tj::jump_loci(c, caps);
      if (json_out)
        std::cout << loci_to_json(l).dump(2) << "\n";
      else
        std::cout << loci_to_text(l);
      return 0;
    }

    if (vp->parsed()) {
      tj::FreeComplex c = resolve_input(vp_input, coeff_str, coeff_explicit);
      tj::JumpLocusSet l = tj::jump_loci(c, caps);
      tj::IndexingMode mode = tj::IndexingMode::perverse();
      if (vp_mode != "perverse") {
        if (vp_mode.rfind("space:", 0) != 0)
          throw tj::ParseError("mode must be perverse or space:<n>");
        mode = tj::IndexingMode::space(static_cast<int>(
            parse_long(vp_mode.substr(6), "space dimension")));
      }
      tj::VerificationReport rep = tj::verify_propagation(l, mode, caps);
      if (!vp_components.empty()) {
        tj::VerificationReport frag = tj::verify_components(
            l, mode, load_components(vp_components, l.ring()), caps);
        for (const auto& [key, res] : frag.properties)
          rep.properties[key] = res;
      }
      std::optional<tj::BettiBoundsReport> bounds;
      if (!mode.is_perverse())
        bounds = tj::betti_bounds(l, mode.space_dim(), vp_r, mode);
      bool ok = rep.all_pass() && (!bounds || bounds->all_pass());
      if (json_out) {
        nlohmann::json j = rep.to_json();
        if (bounds) j["betti_bounds"] = bounds->to_json();
        j["overall"] = ok ? "pass" : "fail";
        std::cout << j.dump(2) << "\n";
      } else {
        std::ostringstream out;
        out << report_to_text(rep);
        if (bounds) {
          out << "betti bounds (n = " << mode.space_dim() << ", r = " << vp_r
              << "): betti =";
          for (int b : bounds->betti) out << " " << b;
          out << "\n";
          out << "  positivity " << status_text(bounds->positivity) << ": "
              << bounds->positivity.witness << "\n";
          out << "  b1 bound " << status_text(bounds->b1_bound) << ": "
              << bounds->b1_bound.witness << "\n";
          out << "  signed Euler " << status_text(bounds->signed_euler)
              << ": " << bounds->signed_euler.witness << "\n";
        }
        out << "overall: " << (ok ? "pass" : "fail") << "\n";
        std::cout << out.str();
      }
      return ok ? 0 : 1;
    }

    if (ad->parsed()) {
      if (coeff_explicit && parse_coeff(coeff_str).kind() !=
                                tj::CoeffKind::Integer)
        throw tj::DomainError("abelian-duality works over zz");
      tj::FreeComplex c = resolve_input(ad_input, "zz", false);
      if (c.ring().coeff().kind() != tj::CoeffKind::Integer)
        throw tj::DomainError("abelian-duality needs an integer complex");
      int n = ad_n >= 0 ? ad_n : c.hi();
      std::vector<long> primes;
      for (const std::string& p : split(ad_primes, ','))
        if (!p.empty()) primes.push_back(parse_long(p, "prime"));
      tj::DualityVerdict verdict =
          tj::duality_check(c, n, primes, !ad_partial, caps);
      if (json_out) {
        std::cout << verdict.to_json().dump(2) << "\n";
      } else {
        std::ostringstream out;
        out << "verdict: ";
        switch (verdict.kind) {
          case tj::DualityVerdict::Kind::Abelian:
            out << "abelian-duality of dimension " << verdict.n;
            break;
          case tj::DualityVerdict::Kind::Partial:
            out << "partial-abelian-duality of dimension " << verdict.n;
            break;
          case tj::DualityVerdict::Kind::No:
            out << "no";
            break;
        }
        out << "\n";
        out << "primes tested:";
        for (long p : verdict.primes_tested) out << " " << p;
        out << "\n";
        out << "caveat: " << verdict.caveat << "\n";
        if (verdict.kind == tj::DualityVerdict::Kind::No)
          out << "witness: field " << verdict.witness_field << ", degree "
              << verdict.witness_degree << " (" << verdict.witness_reason
              << ")\n";
        std::cout << out.str();
      }
      return verdict.positive() ? 0 : 1;
    }

    if (orc->parsed()) {
      tj::FreeComplex c = resolve_input(orc_input, coeff_str, coeff_explicit);
      tj::JumpLocusSet l = tj::jump_loci(c, caps);
      tj::SamplePlan plan;
      plan.seed = orc_seed;
      tj::OracleReport rep = tj::run_oracle(l, plan, caps);
      if (json_out) {
        std::cout << rep.to_json().dump(2) << "\n";
      } else {
        std::ostringstream out;
        out << "points tested: " << rep.points_tested << "\n";
        out << "mismatches: " << rep.mismatches << "\n";
        for (const tj::OracleRow& row : rep.rows) {
          out << (row.consistent ? "ok   " : "BAD  ") << row.field << "  "
              << row.point << "  betti";
          for (int b : row.betti) out << " " << b;
          out << "  member";
          for (bool m : row.member) out << " " << (m ? 1 : 0);
          out << "\n";
        }
        std::cout << out.str();
      }
      return rep.mismatches == 0 ? 0 : 1;
    }
  } catch (const tj::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
