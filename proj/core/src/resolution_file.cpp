#include "jumpnum/resolution_file.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>
#include <vector>

#include "jumpnum/error.hpp"
#include "jumpnum/lattice.hpp"

namespace jumpnum {
namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    Line parsed{number, {}};
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      std::size_t start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i > start) parsed.tokens.push_back(line.substr(start, i - start));
    }
    if (!parsed.tokens.empty()) out.push_back(std::move(parsed));
  }
  return out;
}

Integer to_integer(std::string_view tok, std::size_t line) {
  Integer value = 0;
  std::string_view digits = tok;
  if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw ParseError(line, "expected an integer", "'" + std::string(tok) + "'");
  }
  return value;
}

}  // namespace

IdealSpec parse_resolution(std::string_view text) {
  auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(0, "empty resolution file");

  const Line& head = lines.front();
  if (head.tokens[0] != "N") throw ParseError(head.number, "expected 'N <n>'");
  if (head.tokens.size() != 2) throw ParseError(head.number, "'N' takes exactly one value");
  Integer n = to_integer(head.tokens[1], head.number);
  if (n < 1) throw ParseError(head.number, "vertex count must be positive");
  const auto size = static_cast<std::size_t>(n);

  std::vector<std::optional<std::vector<Vertex>>> prox(size);
  prox[0] = std::vector<Vertex>{};
  std::optional<std::vector<Integer>> d_hat;

  for (std::size_t li = 1; li < lines.size(); ++li) {
    const Line& line = lines[li];
    const auto& tok = line.tokens;
    if (d_hat) throw ParseError(line.number, "unexpected content after the D line");
    if (tok[0] == "P") {
      if (tok.size() < 3 || tok.size() > 4) {
        throw ParseError(line.number, "'P' takes a vertex and one or two proximate vertices");
      }
      Integer mu = to_integer(tok[1], line.number);
      if (mu < 2 || mu > n) {
        throw ParseError(line.number, "vertex out of range", std::to_string(mu) + " not in 2.." + std::to_string(n));
      }
      auto m = static_cast<std::size_t>(mu - 1);
      if (prox[m]) throw ParseError(line.number, "duplicate P line", "vertex " + std::to_string(mu));
      std::vector<Vertex> set;
      for (std::size_t i = 2; i < tok.size(); ++i) {
        Integer nu = to_integer(tok[i], line.number);
        if (nu >= mu) {
          throw ParseError(line.number, "forward reference",
                           "vertex " + std::to_string(mu) + " proximate to " + std::to_string(nu));
        }
        if (nu < 1) throw ParseError(line.number, "vertex out of range", std::to_string(nu));
        set.push_back(static_cast<Vertex>(nu - 1));
      }
      prox[m] = std::move(set);
    } else if (tok[0] == "D") {
      for (std::size_t m = 1; m < size; ++m) {
        if (!prox[m]) throw ParseError(line.number, "missing P line", "vertex " + std::to_string(m + 1));
      }
      if (tok.size() - 1 != size) {
        throw ParseError(line.number, "wrong D arity",
                         "expected " + std::to_string(size) + " values, got " + std::to_string(tok.size() - 1));
      }
      std::vector<Integer> values;
      for (std::size_t i = 1; i < tok.size(); ++i) {
        Integer x = to_integer(tok[i], line.number);
        if (x < 0) throw ParseError(line.number, "negative entry", "d" + std::to_string(i) + " = " + std::to_string(x));
        values.push_back(x);
      }
      d_hat = std::move(values);
    } else if (tok[0] == "N") {
      throw ParseError(line.number, "duplicate N line");
    } else {
      throw ParseError(line.number, "unknown record", "'" + std::string(tok[0]) + "'");
    }
  }
  if (!d_hat) throw ParseError(lines.back().number, "missing D line");

  std::vector<std::vector<Vertex>> sets;
  for (auto& p : prox) sets.push_back(std::move(*p));
  return {ResolutionGraph(std::move(sets)), std::move(*d_hat)};
}

std::string serialize_resolution(const IdealSpec& ideal) {
  std::ostringstream out;
  const std::size_t n = ideal.graph.size();
  out << "N " << n << '\n';
  for (Vertex m = 1; m < n; ++m) {
    out << "P " << m + 1;
    for (Vertex v : ideal.graph.prox[m]) out << ' ' << v + 1;
    out << '\n';
  }
  out << 'D';
  for (Integer x : ideal.d_hat) out << ' ' << x;
  out << '\n';
  return out.str();
}

IntMatrix parse_integer_matrix(std::string_view text) {
  std::vector<std::vector<Integer>> rows;
  std::size_t width = 0;
  for (const auto& line : tokenize(text)) {
    std::vector<Integer> row;
    for (auto tok : line.tokens) row.push_back(to_integer(tok, line.number));
    if (rows.empty()) width = row.size();
    if (row.size() != width) {
      throw ParseError(line.number, "ragged matrix",
                       "expected " + std::to_string(width) + " entries, got " + std::to_string(row.size()));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError(0, "empty matrix");
  return IntMatrix(std::move(rows));
}

ResolutionGraph proximity_from_valuation(const IntMatrix& v) {
  const std::size_t n = v.rows();
  if (n == 0 || v.cols() != n) throw InvalidGraph("valuation matrix must be square and nonempty");
  if (!v.is_symmetric()) throw InvalidGraph("valuation matrix is not symmetric");

  // V = Q Q^T with Q = P^-1 unipotent lower triangular, so Q is the Cholesky
  // factor of V and has to come out integral with unit diagonal.
  IntMatrix q(n, n);
  for (Vertex j = 0; j < n; ++j) {
    Integer diag = v(j, j);
    for (Vertex k = 0; k < j; ++k) diag = checked_sub(diag, checked_mul(q(j, k), q(j, k)));
    if (diag != 1) {
      throw InvalidGraph("valuation matrix is not realizable: pivot " + std::to_string(j + 1) + " is " +
                         std::to_string(diag) + ", expected 1");
    }
    q(j, j) = 1;
    for (Vertex i = j + 1; i < n; ++i) {
      Integer x = v(i, j);
      for (Vertex k = 0; k < j; ++k) x = checked_sub(x, checked_mul(q(i, k), q(j, k)));
      q(i, j) = x;
    }
  }

  // P = Q^-1 by forward substitution.
  IntMatrix p = IntMatrix::identity(n);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = 0; j < i; ++j) {
      Integer x = 0;
      for (Vertex k = j; k < i; ++k) x = checked_sub(x, checked_mul(q(i, k), p(k, j)));
      p(i, j) = x;
    }
  }

  std::vector<std::vector<Vertex>> prox(n);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = 0; j < i; ++j) {
      if (p(i, j) == -1) {
        prox[i].push_back(j);
      } else if (p(i, j) != 0) {
        throw InvalidGraph("valuation matrix is not realizable: proximity entry (" + std::to_string(i + 1) + "," +
                           std::to_string(j + 1) + ") is " + std::to_string(p(i, j)));
      }
    }
  }
  ResolutionGraph g(std::move(prox));
  require_valid(g);
  if (valuation_table(g).v != v) throw InvalidGraph("valuation matrix is not realizable");
  return g;
}

}  // namespace jumpnum
