#include "pcsf/io.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "pcsf/errors.hpp"

namespace {

using namespace pcsf;

/// Splits a line into whitespace tokens, dropping `#` comments.
std::vector<std::string> tokenize(const std::string& line) {
  std::string body = line.substr(0, line.find('#'));
  std::istringstream in(body);
  std::vector<std::string> tokens;
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

int parse_vertex(const std::string& tok, int n, int line) {
  int v;
  try {
    std::size_t used;
    v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
  } catch (const std::exception&) {
    throw ParseError(line, "not a vertex: " + tok);
  }
  if (v < 1 || v > n)
    throw ParseError(line, "vertex out of range: " + tok);
  return v - 1;
}

Rat parse_value(const std::string& tok, int line) {
  try {
    return rat_from_decimal(tok);
  } catch (const std::exception& e) {
    throw ParseError(line, e.what());
  }
}

/// Accepts both decimal and `p/q` forms.
Rat parse_rational(const std::string& tok, int line) {
  std::size_t slash = tok.find('/');
  if (slash == std::string::npos) return parse_value(tok, line);
  Rat num = parse_value(tok.substr(0, slash), line);
  Rat den = parse_value(tok.substr(slash + 1), line);
  if (num.get_den() != 1 || den.get_den() != 1 || den == 0)
    throw ParseError(line, "malformed rational: " + tok);
  return num / den;
}

/// Exact decimal form; requires the denominator to divide 10^9.
std::string rat_to_decimal(const Rat& r) {
  mpz_class scale = 1;
  for (int i = 0; i < 9; ++i) scale *= 10;
  if (scale % r.get_den() != 0)
    throw InstanceError("value has no 9-digit decimal form: " +
                        rat_to_string(r));
  mpz_class scaled = r.get_num() * (scale / r.get_den());
  std::string digits = scaled.get_str();
  while (digits.size() < 10) digits.insert(digits.begin(), '0');
  std::string whole = digits.substr(0, digits.size() - 9);
  std::string frac = digits.substr(digits.size() - 9);
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  return frac.empty() ? whole : whole + "." + frac;
}

}  // namespace

namespace pcsf {

PcsfInstance parse_instance(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool seen_header = false;
  int n = -1;
  std::vector<std::tuple<int, int, Rat>> edges, penalties;
  std::vector<std::pair<int, int>> pair_keys;

  while (std::getline(in, line)) {
    ++lineno;
    std::vector<std::string> tok = tokenize(line);
    if (tok.empty()) continue;

    if (!seen_header) {
      if (tok.size() != 2 || tok[0] != "pcsf" || tok[1] != "1")
        throw ParseError(lineno, "expected header `pcsf 1`");
      seen_header = true;
      continue;
    }
    if (tok[0] == "nodes") {
      if (n >= 0) throw ParseError(lineno, "duplicate nodes line");
      if (tok.size() != 2) throw ParseError(lineno, "expected `nodes <n>`");
      try {
        n = std::stoi(tok[1]);
      } catch (const std::exception&) {
        throw ParseError(lineno, "not a count: " + tok[1]);
      }
      if (n < 0) throw ParseError(lineno, "negative node count");
      continue;
    }
    if (n < 0) throw ParseError(lineno, "nodes line must come first");
    if (tok[0] == "edge") {
      if (tok.size() != 4)
        throw ParseError(lineno, "expected `edge <u> <v> <cost>`");
      int u = parse_vertex(tok[1], n, lineno);
      int v = parse_vertex(tok[2], n, lineno);
      if (u == v) throw ParseError(lineno, "self-loop edge");
      edges.emplace_back(u, v, parse_value(tok[3], lineno));
    } else if (tok[0] == "pair") {
      if (tok.size() != 4)
        throw ParseError(lineno, "expected `pair <i> <j> <penalty>`");
      int i = parse_vertex(tok[1], n, lineno);
      int j = parse_vertex(tok[2], n, lineno);
      if (i == j) throw ParseError(lineno, "pair of equal vertices");
      std::pair<int, int> key = std::minmax(i, j);
      for (const auto& k : pair_keys)
        if (k == key) throw ParseError(lineno, "duplicate pair line");
      pair_keys.push_back(key);
      penalties.emplace_back(i, j, parse_value(tok[3], lineno));
    } else {
      throw ParseError(lineno, "unknown directive: " + tok[0]);
    }
  }
  if (!seen_header) throw ParseError(lineno, "missing `pcsf 1` header");
  if (n < 0) throw ParseError(lineno, "missing nodes line");
  return PcsfInstance::create(n, std::move(edges), std::move(penalties));
}

std::string serialize_instance(const PcsfInstance& inst) {
  std::ostringstream out;
  out << "pcsf 1\n";
  out << "nodes " << inst.vertex_count() << '\n';
  for (const Edge& e : inst.edges())
    out << "edge " << e.u + 1 << ' ' << e.v + 1 << ' '
        << rat_to_decimal(e.cost) << '\n';
  for (const PairDemand& d : inst.pairs())
    out << "pair " << d.i + 1 << ' ' << d.j + 1 << ' '
        << rat_to_decimal(d.penalty) << '\n';
  return out.str();
}

Solution parse_solution(const std::string& text, const PcsfInstance& inst) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  Solution sol;
  bool seen_cost = false;
  const int n = inst.vertex_count();

  while (std::getline(in, line)) {
    ++lineno;
    std::vector<std::string> tok = tokenize(line);
    if (tok.empty()) continue;
    if (tok[0] == "cost") {
      if (tok.size() != 2 || seen_cost)
        throw ParseError(lineno, "expected one `cost <value>` line");
      sol.cost = parse_rational(tok[1], lineno);
      seen_cost = true;
    } else if (tok[0] == "buy") {
      if (tok.size() != 3) throw ParseError(lineno, "expected `buy <u> <v>`");
      int u = parse_vertex(tok[1], n, lineno);
      int v = parse_vertex(tok[2], n, lineno);
      int e = -1;
      for (int k = 0; k < static_cast<int>(inst.edges().size()); ++k)
        if (std::min(u, v) == inst.edges()[k].u &&
            std::max(u, v) == inst.edges()[k].v)
          e = k;
      if (e < 0) throw ParseError(lineno, "no such edge in the instance");
      sol.forest.push_back(e);
    } else if (tok[0] == "pay") {
      if (tok.size() != 3) throw ParseError(lineno, "expected `pay <i> <j>`");
      int i = parse_vertex(tok[1], n, lineno);
      int j = parse_vertex(tok[2], n, lineno);
      int p = inst.pair_index(i, j);
      if (p < 0) throw ParseError(lineno, "no such demand pair");
      sol.penalized.push_back(p);
    } else {
      throw ParseError(lineno, "unknown directive: " + tok[0]);
    }
  }
  if (!seen_cost) throw ParseError(lineno, "missing cost line");
  return sol;
}

std::string serialize_solution(const Solution& sol,
                               const PcsfInstance& inst) {
  std::ostringstream out;
  out << "cost " << rat_to_string(sol.cost) << '\n';
  for (int e : sol.forest)
    out << "buy " << inst.edges()[e].u + 1 << ' ' << inst.edges()[e].v + 1
        << '\n';
  for (int p : sol.penalized)
    out << "pay " << inst.pairs()[p].i + 1 << ' ' << inst.pairs()[p].j + 1
        << '\n';
  return out.str();
}

PcsfInstance generate_instance(int nodes, int edges, int pairs,
                               long max_cost, long max_penalty,
                               std::uint64_t seed) {
  if (nodes < 0 || edges < 0 || pairs < 0)
    throw InstanceError("negative count");
  long simple = static_cast<long>(nodes) * (nodes - 1) / 2;
  if (edges > simple || pairs > simple)
    throw InstanceError("more edges or pairs than a simple graph allows");
  if (max_cost < 0 || (pairs > 0 && max_penalty < 1))
    throw InstanceError("value bound out of range");

  std::mt19937_64 rng(seed);
  // rng() % k keeps the byte stream platform-independent, unlike
  // std::uniform_int_distribution.
  auto bounded = [&rng](std::uint64_t k) { return rng() % k; };

  std::vector<std::pair<int, int>> all;
  for (int u = 0; u < nodes; ++u)
    for (int v = u + 1; v < nodes; ++v) all.emplace_back(u, v);

  auto pick = [&](int count) {
    std::vector<std::pair<int, int>> deck = all;
    for (int i = 0; i < count; ++i)
      std::swap(deck[i], deck[i + bounded(deck.size() - i)]);
    deck.resize(count);
    return deck;
  };

  std::vector<std::tuple<int, int, Rat>> edge_list, penalty_list;
  for (auto [u, v] : pick(edges))
    edge_list.emplace_back(u, v, Rat(static_cast<long>(bounded(max_cost + 1))));
  for (auto [i, j] : pick(pairs))
    penalty_list.emplace_back(i, j,
                              Rat(1 + static_cast<long>(bounded(max_penalty))));
  return PcsfInstance::create(nodes, std::move(edge_list),
                              std::move(penalty_list));
}

}  // namespace pcsf
