#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <iostream>
#include <sstream>

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif

#include "jumpnum/error.hpp"
#include "jumpnum/jumping_numbers.hpp"
#include "jumpnum/oracle.hpp"
#include "jumpnum/resolution_file.hpp"

namespace jumpnum::cli {
namespace {

constexpr int kInputError = 1;
constexpr int kMismatch = 2;

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

IdealSpec load(const std::string& path) { return parse_resolution(slurp(path)); }

Rational positive_rational(const std::string& text, const char* what) {
  Rational r = Rational::parse(text);
  if (r.sign() <= 0) throw DomainError(std::string(what) + " must be positive, got " + text);
  return r;
}

Vertex vertex_arg(long long one_based, std::size_t n) {
  if (one_based < 1 || static_cast<std::size_t>(one_based) > n) {
    throw DomainError("vertex " + std::to_string(one_based) + " out of range 1.." + std::to_string(n));
  }
  return static_cast<Vertex>(one_based - 1);
}

void print_row(std::ostream& out, const std::vector<Integer>& row) {
  for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << row[i];
  out << '\n';
}

void print_set(std::ostream& out, const JumpingSet& set, const std::string& format) {
  for (const auto& e : set.entries()) {
    out << e.xi;
    if (format == "tsv") {
      out << '\t';
      for (std::size_t i = 0; i < e.support.size(); ++i) out << (i ? "," : "") << e.support[i] + 1;
    }
    out << '\n';
  }
}

std::string joined(const std::vector<Rational>& xs) {
  std::string s;
  for (const auto& x : xs) s += (s.empty() ? "" : " ") + x.to_string();
  return s.empty() ? "-" : s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Jumping numbers of complete ideals from resolution data", "jumpnum"};
  app.require_subcommand(1);

  std::string file;
  std::string which;
  std::string bound_text = "2";
  std::string xi_text;
  std::string format = "text";
  std::string dhat_text;
  long long vertex = 0;

  auto* validate_cmd = app.add_subcommand("validate", "Check a resolution file");
  validate_cmd->add_option("file", file, "Resolution file ('-' for stdin)")->required();

  auto* matrices_cmd = app.add_subcommand("matrices", "Print P, Q, V or the canonical vector k");
  matrices_cmd->add_option("file", file)->required();
  matrices_cmd->add_option("--which", which)->required()->check(CLI::IsMember({"P", "Q", "V", "K"}));

  auto* semigroup_cmd = app.add_subcommand("semigroup", "Branch gcds, Frobenius multiples and S at a vertex");
  semigroup_cmd->add_option("file", file)->required();
  semigroup_cmd->add_option("--vertex", vertex)->required();

  auto* jumping_cmd = app.add_subcommand("jumping", "Jumping numbers up to a bound");
  jumping_cmd->add_option("file", file)->required();
  jumping_cmd->add_option("--bound", bound_text, "Upper bound p/q")->capture_default_str();
  auto* jumping_vertex = jumping_cmd->add_option("--vertex", vertex, "Only numbers supported here");
  jumping_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "tsv"}))->capture_default_str();

  auto* lct_cmd = app.add_subcommand("lct", "Log-canonical threshold");
  lct_cmd->add_option("file", file)->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "Jumping numbers from multiplier ideals, checked against the engine");
  oracle_cmd->add_option("file", file)->required();
  oracle_cmd->add_option("--bound", bound_text)->capture_default_str();
  oracle_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "tsv"}))->capture_default_str();

  auto* multiplier_cmd = app.add_subcommand("multiplier", "Factorization vector of the multiplier ideal at xi");
  multiplier_cmd->add_option("file", file)->required();
  multiplier_cmd->add_option("--xi", xi_text)->required();

  auto* fixture_cmd = app.add_subcommand("fixture-gen", "Resolution file from a valuation matrix");
  fixture_cmd->add_option("vfile", file, "Valuation matrix, one row per line")->required();
  fixture_cmd->add_option("--dhat", dhat_text, "Factorization vector, space or comma separated")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (validate_cmd->parsed()) {
      IdealSpec ideal = load(file);
      auto violations = validate(ideal.graph);
      if (violations.empty()) {
        try {
          require_valid(ideal);
        } catch (const DomainError& e) {
          violations.push_back({0, "ideal", e.what()});
        }
      }
      if (violations.empty()) {
        out << "OK\n";
        return 0;
      }
      for (const auto& v : violations) out << v.rule << ": " << v.message << '\n';
      return kInputError;
    }

    if (fixture_cmd->parsed()) {
      IntMatrix v = parse_integer_matrix(slurp(file));
      for (auto& c : dhat_text)
        if (c == ',') c = ' ';
      std::istringstream in(dhat_text);
      std::vector<Integer> d_hat;
      for (std::string tok; in >> tok;) d_hat.push_back(Rational::parse(tok).num());
      IdealSpec ideal{proximity_from_valuation(v), d_hat};
      require_valid(ideal);
      out << serialize_resolution(ideal);
      return 0;
    }

    IdealSpec ideal = load(file);
    require_valid(ideal);

    if (matrices_cmd->parsed()) {
      ExceptionalLattice lat(ideal.graph);
      if (which == "P") out << lat.p();
      if (which == "Q") out << lat.q();
      if (which == "V") out << lat.valuations().v;
      if (which == "K") print_row(out, lat.canonical().k);
      return 0;
    }

    JumpingCalculator calc(ideal);

    if (semigroup_cmd->parsed()) {
      Vertex mu = vertex_arg(vertex, ideal.graph.size());
      const auto& lat = calc.lattice();
      auto data = branch_data(lat.valuations(), lat.dual(), mu);
      for (const auto& b : data) out << "s " << mu + 1 << ' ' << b.neighbor + 1 << ' ' << b.s << '\n';
      for (const auto& b : data) out << "M_frobenius " << b.neighbor + 1 << ' ' << b.frobenius_multiple << '\n';
      out << "S generators:";
      for (Integer g : calc.semigroup(mu).minimal_generators()) out << ' ' << g;
      out << '\n';
      return 0;
    }

    if (jumping_cmd->parsed()) {
      Rational bound = positive_rational(bound_text, "bound");
      if (jumping_vertex->count() > 0) {
        print_set(out, calc.jumping_at(vertex_arg(vertex, ideal.graph.size()), bound), format);
      } else {
        print_set(out, calc.jumping_set(bound), format);
      }
      return 0;
    }

    if (lct_cmd->parsed()) {
      out << calc.lct() << '\n';
      return 0;
    }

    if (oracle_cmd->parsed()) {
      Rational bound = positive_rational(bound_text, "bound");
      JumpingSet found = MultiplierOracle(ideal).jumping_set(bound);
      print_set(out, found, format);
      auto expected = calc.jumping_set(bound).values();
      auto actual = found.values();
      if (actual == expected) {
        out << "MATCH\n";
        return 0;
      }
      std::vector<Rational> only_oracle, only_engine;
      std::set_difference(actual.begin(), actual.end(), expected.begin(), expected.end(),
                          std::back_inserter(only_oracle));
      std::set_difference(expected.begin(), expected.end(), actual.begin(), actual.end(),
                          std::back_inserter(only_engine));
      out << "MISMATCH: oracle only " << joined(only_oracle) << "; engine only " << joined(only_engine) << '\n';
      return kMismatch;
    }

    if (multiplier_cmd->parsed()) {
      Rational xi = Rational::parse(xi_text);
      if (xi.sign() < 0) throw DomainError("xi must be nonnegative, got " + xi_text);
      print_row(out, MultiplierOracle(ideal).multiplier_divisor(xi).divisor.integers());
      return 0;
    }
  } catch (const Error& e) {
    err << "jumpnum: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace jumpnum::cli
