#include "seifsec/seifert.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace seifsec {

void validate_pair(const ExceptionalPair& p, std::size_t index) {
  if (p.alpha < 1) {
    throw InvalidInvariants("pair " + std::to_string(index + 1) + " (" + std::to_string(p.alpha) + "," +
                            std::to_string(p.beta) + "): multiplicity must be >= 1");
  }
  if (gcd(p.alpha, p.beta) != 1) {
    throw InvalidInvariants("pair " + std::to_string(index + 1) + " (" + std::to_string(p.alpha) + "," +
                            std::to_string(p.beta) + "): gcd(" + std::to_string(p.alpha) + "," +
                            std::to_string(p.beta) + ") = " + std::to_string(gcd(p.alpha, p.beta)) + " != 1");
  }
}

SeifertData::SeifertData(Int base_genus, std::vector<ExceptionalPair> pairs)
    : base_genus_(base_genus), pairs_(std::move(pairs)) {
  if (base_genus_ < 0) throw InvalidInvariants("base genus must be non-negative");
  for (std::size_t i = 0; i < pairs_.size(); ++i) validate_pair(pairs_[i], i);
}

Rational euler_number(const SeifertData& m) {
  Rational e;
  for (const auto& p : m.pairs()) e -= Rational(p.beta, p.alpha);
  return e;
}

Rational euler_number(const NormalForm& nf) {
  Rational e(-nf.b);
  for (const auto& p : nf.singular_pairs) e -= Rational(p.beta, p.alpha);
  return e;
}

NormalForm normalize(const SeifertData& m) {
  NormalForm nf;
  nf.base_genus = m.base_genus();
  for (const auto& p : m.pairs()) {
    if (p.alpha == 1) {
      nf.b = checked_add(nf.b, p.beta);
      continue;
    }
    nf.b = checked_add(nf.b, floor_div(p.beta, p.alpha));
    nf.singular_pairs.push_back({p.alpha, floor_mod(p.beta, p.alpha)});
  }
  std::sort(nf.singular_pairs.begin(), nf.singular_pairs.end());
  return nf;
}

SeifertData to_seifert(const NormalForm& nf) {
  std::vector<ExceptionalPair> pairs;
  pairs.reserve(nf.singular_pairs.size() + 1);
  if (nf.b != 0) pairs.push_back({1, nf.b});
  pairs.insert(pairs.end(), nf.singular_pairs.begin(), nf.singular_pairs.end());
  return SeifertData(nf.base_genus, std::move(pairs));
}

bool is_isomorphic(const SeifertData& m1, const SeifertData& m2) { return normalize(m1) == normalize(m2); }

namespace {

struct MoveApplier {
  const SeifertData& m;

  SeifertData operator()(const moves::Permute& mv) const {
    const auto& src = m.pairs();
    if (mv.order.size() != src.size()) throw InvalidMove("permutation length does not match pair count");
    std::vector<bool> seen(src.size(), false);
    std::vector<ExceptionalPair> out;
    out.reserve(src.size());
    for (std::size_t i : mv.order) {
      if (i >= src.size() || seen[i]) throw InvalidMove("not a permutation of the pair indices");
      seen[i] = true;
      out.push_back(src[i]);
    }
    return SeifertData(m.base_genus(), std::move(out));
  }

  SeifertData operator()(const moves::InsertTrivial&) const {
    auto out = m.pairs();
    out.push_back({1, 0});
    return SeifertData(m.base_genus(), std::move(out));
  }

  SeifertData operator()(const moves::DeleteTrivial& mv) const {
    const auto& src = m.pairs();
    if (mv.index >= src.size()) throw InvalidMove("delete index out of range");
    if (!src[mv.index].is_trivial()) {
      throw InvalidMove("pair " + std::to_string(mv.index + 1) + " is not (1,0) and cannot be deleted");
    }
    auto out = src;
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(mv.index));
    return SeifertData(m.base_genus(), std::move(out));
  }

  SeifertData operator()(const moves::Twist& mv) const {
    const auto& src = m.pairs();
    if (mv.k.size() != src.size()) throw InvalidMove("twist vector length does not match pair count");
    Int sum = 0;
    for (Int k : mv.k) sum = checked_add(sum, k);
    if (sum != 0) throw InvalidMove("twist coefficients must sum to zero");
    auto out = src;
    for (std::size_t i = 0; i < out.size(); ++i) {
      out[i].beta = checked_add(out[i].beta, checked_mul(mv.k[i], out[i].alpha));
    }
    return SeifertData(m.base_genus(), std::move(out));
  }
};

template <typename T>
std::string join(const std::vector<T>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

}  // namespace

SeifertData apply_move(const SeifertData& m, const MoveSpec& move) { return std::visit(MoveApplier{m}, move); }

std::string describe(const MoveSpec& move) {
  struct {
    std::string operator()(const moves::Permute& mv) const { return "Permute([" + join(mv.order) + "])"; }
    std::string operator()(const moves::InsertTrivial&) const { return "InsertTrivial"; }
    std::string operator()(const moves::DeleteTrivial& mv) const {
      return "DeleteTrivial(" + std::to_string(mv.index) + ")";
    }
    std::string operator()(const moves::Twist& mv) const { return "Twist([" + join(mv.k) + "])"; }
  } v;
  return std::visit(v, move);
}

// ---------------------------------------------------------------------------
// Text syntax

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::invalid_argument("parse error at column " + std::to_string(position + 1) + ": " + message),
      position_(position) {}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  SeifertData parse() {
    skip_ws();
    expect('M');
    skip_ws();
    expect('(');
    Int genus = integer("base genus");
    skip_ws();
    expect(';');
    std::vector<ExceptionalPair> pairs;
    skip_ws();
    if (peek() == '(') {
      pairs.push_back(pair());
      skip_ws();
      while (peek() == ',') {
        ++pos_;
        skip_ws();
        pairs.push_back(pair());
        skip_ws();
      }
    }
    expect(')');
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    if (genus < 0) throw InvalidInvariants("base genus must be non-negative");
    return SeifertData(genus, std::move(pairs));
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    if (peek() != c) {
      fail(std::string("expected '") + c + "'" +
           (pos_ < text_.size() ? std::string(", found '") + text_[pos_] + "'" : std::string(", found end of input")));
    }
    ++pos_;
  }

  Int integer(const char* what) {
    skip_ws();
    std::size_t start = pos_;
    if (peek() == '+' || peek() == '-') ++pos_;
    std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      fail(std::string("expected integer for ") + what);
    }
    Int value{};
    const char* first = text_.data() + (text_[start] == '+' ? start + 1 : start);
    auto [ptr, ec] = std::from_chars(first, text_.data() + pos_, value);
    if (ec != std::errc() || ptr != text_.data() + pos_) {
      pos_ = start;
      fail(std::string("integer out of range for ") + what);
    }
    return value;
  }

  ExceptionalPair pair() {
    expect('(');
    Int a = integer("alpha");
    skip_ws();
    expect(',');
    Int b = integer("beta");
    skip_ws();
    expect(')');
    return {a, b};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

SeifertData parse_seifert(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const SeifertData& m) {
  std::ostringstream os;
  os << m;
  return os.str();
}

std::string to_string(const NormalForm& nf) { return to_string(to_seifert(nf)); }

std::ostream& operator<<(std::ostream& os, const ExceptionalPair& p) {
  return os << '(' << p.alpha << ',' << p.beta << ')';
}

std::ostream& operator<<(std::ostream& os, const SeifertData& m) {
  os << "M(" << m.base_genus() << ';';
  for (std::size_t i = 0; i < m.pairs().size(); ++i) os << (i ? ", " : " ") << m.pairs()[i];
  return os << ')';
}

}  // namespace seifsec
