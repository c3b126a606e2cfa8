#include "zdg/semiring.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>

#include "zdg/error.hpp"

namespace zdg {

namespace {

void check_table(const FiniteSemiring& S, const std::vector<int>& t,
                 const char* which) {
  size_t m = (size_t)S.size;
  if (t.size() != m * m)
    throw StructureError(std::string(which) + " table has wrong size");
  for (int v : t)
    if (v < 0 || v >= S.size)
      throw StructureError(std::string(which) + " table entry " +
                           std::to_string(v) + " out of range (order " +
                           std::to_string(S.size) + ")");
}

}  // namespace

AxiomReport check_axioms(const FiniteSemiring& S) {
  if (S.size <= 0) throw StructureError("semiring order must be positive");
  check_table(S, S.add, "add");
  check_table(S, S.mul, "mul");
  if (S.zero < 0 || S.zero >= S.size)
    throw StructureError("zero index out of range");
  if (S.one && (*S.one < 0 || *S.one >= S.size))
    throw StructureError("one index out of range");

  const int m = S.size;
  AxiomReport r;

  // Additive commutative monoid with identity 0. Scans run in the order:
  // identity, commutativity, associativity; each scan is lexicographic.
  for (int a = 0; a < m && r.additive_monoid.ok; ++a)
    if (S.add_at(S.zero, a) != a) r.additive_monoid = {false, {a}};
  for (int a = 0; a < m && r.additive_monoid.ok; ++a)
    for (int b = 0; b < m && r.additive_monoid.ok; ++b)
      if (S.add_at(a, b) != S.add_at(b, a)) r.additive_monoid = {false, {a, b}};
  for (int a = 0; a < m && r.additive_monoid.ok; ++a)
    for (int b = 0; b < m && r.additive_monoid.ok; ++b)
      for (int c = 0; c < m && r.additive_monoid.ok; ++c)
        if (S.add_at(S.add_at(a, b), c) != S.add_at(a, S.add_at(b, c)))
          r.additive_monoid = {false, {a, b, c}};

  for (int a = 0; a < m && r.multiplicative_semigroup.ok; ++a)
    for (int b = 0; b < m && r.multiplicative_semigroup.ok; ++b)
      for (int c = 0; c < m && r.multiplicative_semigroup.ok; ++c)
        if (S.mul_at(S.mul_at(a, b), c) != S.mul_at(a, S.mul_at(b, c)))
          r.multiplicative_semigroup = {false, {a, b, c}};

  for (int a = 0; a < m && r.left_distributive.ok; ++a)
    for (int b = 0; b < m && r.left_distributive.ok; ++b)
      for (int c = 0; c < m && r.left_distributive.ok; ++c)
        if (S.mul_at(a, S.add_at(b, c)) !=
            S.add_at(S.mul_at(a, b), S.mul_at(a, c)))
          r.left_distributive = {false, {a, b, c}};

  for (int a = 0; a < m && r.right_distributive.ok; ++a)
    for (int b = 0; b < m && r.right_distributive.ok; ++b)
      for (int c = 0; c < m && r.right_distributive.ok; ++c)
        if (S.mul_at(S.add_at(a, b), c) !=
            S.add_at(S.mul_at(a, c), S.mul_at(b, c)))
          r.right_distributive = {false, {a, b, c}};

  for (int x = 0; x < m && r.zero_annihilates.ok; ++x) {
    if (S.mul_at(S.zero, x) != S.zero) r.zero_annihilates = {false, {S.zero, x}};
    else if (S.mul_at(x, S.zero) != S.zero)
      r.zero_annihilates = {false, {x, S.zero}};
  }

  for (int a = 0; a < m && r.commutative.ok; ++a)
    for (int b = 0; b < m && r.commutative.ok; ++b)
      if (S.mul_at(a, b) != S.mul_at(b, a)) r.commutative = {false, {a, b}};

  for (int a = 0; a < m && r.antinegative.ok; ++a)
    for (int b = 0; b < m && r.antinegative.ok; ++b)
      if (a != S.zero && b != S.zero && S.add_at(a, b) == S.zero)
        r.antinegative = {false, {a, b}};

  auto acts_as_identity = [&](int e) -> std::optional<int> {
    for (int x = 0; x < m; ++x)
      if (S.mul_at(e, x) != x || S.mul_at(x, e) != x) return x;
    return std::nullopt;
  };
  if (S.one) {
    if (auto x = acts_as_identity(*S.one))
      r.has_identity = {false, {*S.one, *x}};
  } else {
    bool found = false;
    for (int e = 0; e < m && !found; ++e)
      if (!acts_as_identity(e)) found = true;
    if (!found) r.has_identity = {false, {}};
  }

  return r;
}

FiniteSemiring make_boolean() {
  FiniteSemiring S;
  S.size = 2;
  S.add = {0, 1, 1, 1};
  S.mul = {0, 0, 0, 1};
  S.zero = 0;
  S.one = 1;
  S.names = {"0", "1"};
  S.name = "bool";
  return S;
}

FiniteSemiring make_chain(int k) {
  if (k < 2) throw ParseError("chain order must be at least 2");
  FiniteSemiring S;
  S.size = k;
  S.add.resize(k * k);
  S.mul.resize(k * k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      S.add[a * k + b] = std::max(a, b);
      S.mul[a * k + b] = std::min(a, b);
    }
  S.zero = 0;
  S.one = k - 1;
  S.names.resize(k);
  S.names[0] = "0";
  S.names[k - 1] = "1";
  for (int i = 1; i < k - 1; ++i)
    S.names[i] = i <= 26 ? std::string(1, (char)('a' + i - 1))
                         : "e" + std::to_string(i);
  S.name = "chain" + std::to_string(k);
  return S;
}

FiniteSemiring make_product(const FiniteSemiring& a, const FiniteSemiring& b) {
  FiniteSemiring S;
  S.size = a.size * b.size;
  S.add.resize((size_t)S.size * S.size);
  S.mul.resize((size_t)S.size * S.size);
  auto pack = [&](int i, int j) { return i * b.size + j; };
  for (int i1 = 0; i1 < a.size; ++i1)
    for (int j1 = 0; j1 < b.size; ++j1)
      for (int i2 = 0; i2 < a.size; ++i2)
        for (int j2 = 0; j2 < b.size; ++j2) {
          int u = pack(i1, j1), v = pack(i2, j2);
          S.add[(size_t)u * S.size + v] =
              pack(a.add_at(i1, i2), b.add_at(j1, j2));
          S.mul[(size_t)u * S.size + v] =
              pack(a.mul_at(i1, i2), b.mul_at(j1, j2));
        }
  S.zero = pack(a.zero, b.zero);
  if (a.one && b.one) S.one = pack(*a.one, *b.one);
  S.names.resize(S.size);
  for (int i = 0; i < a.size; ++i)
    for (int j = 0; j < b.size; ++j) {
      const std::string& l = a.names[i];
      // Flatten tuple names so bool x bool x bool reads "(1,1,1)".
      if (l.size() >= 2 && l.front() == '(' && l.back() == ')')
        S.names[pack(i, j)] =
            l.substr(0, l.size() - 1) + "," + b.names[j] + ")";
      else
        S.names[pack(i, j)] = "(" + l + "," + b.names[j] + ")";
    }
  S.name = a.name + " x " + b.name;
  return S;
}

FiniteSemiring build_builtin(const std::string& descriptor) {
  std::istringstream in(descriptor);
  std::vector<std::string> tokens;
  std::string t;
  while (in >> t) tokens.push_back(t);
  if (tokens.empty()) throw ParseError("empty builtin descriptor");

  auto factor = [](const std::string& tok) -> FiniteSemiring {
    if (tok == "bool") return make_boolean();
    if (tok.rfind("chain", 0) == 0) {
      const std::string num = tok.substr(5);
      if (num.empty() ||
          num.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("bad chain descriptor '" + tok + "'");
      return make_chain(std::stoi(num));
    }
    throw ParseError("unknown builtin '" + tok + "'");
  };

  FiniteSemiring S = factor(tokens[0]);
  for (size_t i = 1; i < tokens.size(); i += 2) {
    if (tokens[i] != "x")
      throw ParseError("expected 'x' in descriptor, got '" + tokens[i] + "'");
    if (i + 1 >= tokens.size())
      throw ParseError("dangling 'x' in builtin descriptor");
    S = make_product(S, factor(tokens[i + 1]));
  }
  return S;
}

int ScaledSubsemiring::sub_index_of(int s_elem) const {
  auto it = std::lower_bound(carrier.begin(), carrier.end(), s_elem);
  if (it == carrier.end() || *it != s_elem) return -1;
  return (int)(it - carrier.begin());
}

ScaledSubsemiring scale_subsemiring(const FiniteSemiring& S, int e) {
  if (e < 0 || e >= S.size) throw StructureError("scaling element out of range");
  std::vector<char> in_carrier(S.size, 0);
  for (int s = 0; s < S.size; ++s) in_carrier[S.mul_at(e, s)] = 1;

  ScaledSubsemiring sub;
  for (int s = 0; s < S.size; ++s)
    if (in_carrier[s]) sub.carrier.push_back(s);

  std::vector<int> pos(S.size, -1);
  for (size_t i = 0; i < sub.carrier.size(); ++i) pos[sub.carrier[i]] = (int)i;

  FiniteSemiring& R = sub.ring;
  R.size = (int)sub.carrier.size();
  R.add.resize((size_t)R.size * R.size);
  R.mul.resize((size_t)R.size * R.size);
  for (int i = 0; i < R.size; ++i)
    for (int j = 0; j < R.size; ++j) {
      int sum = S.add_at(sub.carrier[i], sub.carrier[j]);
      int prod = S.mul_at(sub.carrier[i], sub.carrier[j]);
      if (pos[sum] < 0 || pos[prod] < 0)
        throw StructureError("eS is not closed; S is not a commutative antiring");
      R.add[i * R.size + j] = pos[sum];
      R.mul[i * R.size + j] = pos[prod];
    }
  R.zero = pos[S.zero];  // e*0 = 0 is always in the carrier
  if (S.one) {
    int cand = pos[S.mul_at(e, *S.one)];
    bool identity = true;
    for (int i = 0; i < R.size && identity; ++i)
      identity = R.mul_at(cand, i) == i && R.mul_at(i, cand) == i;
    if (identity) R.one = cand;
  }
  R.names.reserve(R.size);
  for (int c : sub.carrier) R.names.push_back(S.names[c]);
  R.name = S.names[e] + "*" + S.name;
  return sub;
}

Bitset annihilator(const FiniteSemiring& S, int x) {
  Bitset an(S.size);
  for (int y = 0; y < S.size; ++y)
    if (S.mul_at(x, y) == S.zero) an.set(y);
  return an;
}

Bitset zero_divisor_set(const FiniteSemiring& S) {
  Bitset z(S.size);
  for (int x = 0; x < S.size; ++x)
    for (int y = 0; y < S.size; ++y) {
      if (y == S.zero) continue;
      if (S.mul_at(x, y) == S.zero || S.mul_at(y, x) == S.zero) {
        z.set(x);
        break;
      }
    }
  return z;
}

namespace {

// Returns content lines with their original 1-based line numbers; comment
// and blank lines are dropped.
std::vector<std::pair<int, std::string>> content_lines(std::istream& in) {
  std::vector<std::pair<int, std::string>> lines;
  std::string line;
  int num = 0;
  while (std::getline(in, line)) {
    ++num;
    size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    lines.emplace_back(num, line);
  }
  return lines;
}

std::vector<int> parse_row(int lineno, const std::string& line, int m) {
  std::istringstream in(line);
  std::vector<int> row;
  std::string tok;
  while (in >> tok) {
    if (tok.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError(lineno, "expected an index, got '" + tok + "'");
    int v = std::stoi(tok);
    if (v >= m)
      throw ParseError(lineno, "entry " + std::to_string(v) +
                                   " out of range (order " +
                                   std::to_string(m) + ")");
    row.push_back(v);
  }
  if ((int)row.size() != m)
    throw ParseError(lineno, "expected " + std::to_string(m) +
                                 " entries, got " +
                                 std::to_string(row.size()));
  return row;
}

}  // namespace

FiniteSemiring parse_semiring(std::istream& in) {
  auto lines = content_lines(in);
  size_t pos = 0;
  auto next = [&](const char* what) -> std::pair<int, std::string> {
    if (pos >= lines.size())
      throw ParseError(lines.empty() ? 1 : lines.back().first,
                       std::string("unexpected end of input, expected ") +
                           what);
    return lines[pos++];
  };
  auto keyword_line = [&](const char* kw) -> std::string {
    auto [lineno, line] = next(kw);
    std::istringstream ls(line);
    std::string head;
    ls >> head;
    if (head != kw)
      throw ParseError(lineno, std::string("expected '") + kw + "', got '" +
                                   head + "'");
    std::string rest;
    std::getline(ls, rest);
    size_t s = rest.find_first_not_of(" \t\r");
    return s == std::string::npos ? "" : rest.substr(s, rest.find_last_not_of(" \t\r") - s + 1);
  };

  FiniteSemiring S;
  S.name = keyword_line("semiring");
  if (S.name.empty())
    throw ParseError(lines[pos - 1].first, "semiring name is empty");

  std::string order = keyword_line("order");
  if (order.empty() || order.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError(lines[pos - 1].first, "bad order '" + order + "'");
  S.size = std::stoi(order);
  if (S.size <= 0) throw ParseError(lines[pos - 1].first, "order must be positive");

  std::string zero = keyword_line("zero");
  if (zero.empty() || zero.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError(lines[pos - 1].first, "bad zero '" + zero + "'");
  S.zero = std::stoi(zero);
  if (S.zero >= S.size)
    throw ParseError(lines[pos - 1].first, "zero index out of range");

  std::string one = keyword_line("one");
  if (one == "none") {
    S.one = std::nullopt;
  } else {
    if (one.empty() || one.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError(lines[pos - 1].first, "bad one '" + one + "'");
    S.one = std::stoi(one);
    if (*S.one >= S.size)
      throw ParseError(lines[pos - 1].first, "one index out of range");
  }

  for (const char* kw : {"add", "mul"}) {
    auto [lineno, line] = next(kw);
    std::istringstream ls(line);
    std::string head;
    ls >> head;
    std::string trailing;
    if (head != kw || (ls >> trailing))
      throw ParseError(lineno, std::string("expected bare '") + kw + "' line");
    std::vector<int>& table = head == "add" ? S.add : S.mul;
    for (int i = 0; i < S.size; ++i) {
      auto [rowno, rowline] = next("table row");
      std::vector<int> row = parse_row(rowno, rowline, S.size);
      table.insert(table.end(), row.begin(), row.end());
    }
  }

  if (pos != lines.size())
    throw ParseError(lines[pos].first, "trailing content after tables");

  S.names.resize(S.size);
  for (int i = 0; i < S.size; ++i) S.names[i] = std::to_string(i);
  return S;
}

FiniteSemiring parse_semiring_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse_semiring(in);
}

std::string format_semiring(const FiniteSemiring& S) {
  std::ostringstream out;
  out << "semiring " << S.name << "\n";
  out << "order " << S.size << "\n";
  out << "zero " << S.zero << "\n";
  if (S.one)
    out << "one " << *S.one << "\n";
  else
    out << "one none\n";
  for (const char* kw : {"add", "mul"}) {
    out << kw << "\n";
    const std::vector<int>& table = std::string(kw) == "add" ? S.add : S.mul;
    for (int i = 0; i < S.size; ++i) {
      for (int j = 0; j < S.size; ++j)
        out << (j ? " " : "") << table[i * S.size + j];
      out << "\n";
    }
  }
  return out.str();
}

std::string format_element_set(const FiniteSemiring& S, const Bitset& set) {
  std::string out = "{";
  bool first = true;
  for (int i = set.next(0); i >= 0; i = set.next(i + 1)) {
    if (!first) out += ",";
    out += S.names[i];
    first = false;
  }
  return out + "}";
}

}  // namespace zdg
