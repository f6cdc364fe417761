#include "boolform/boolfun.hpp"

#include "boolform/numeric.hpp"

#include <bit>
#include <sstream>

namespace boolform {

std::string to_string(const Literal& l) {
  return (l.negated ? "~x" : "x") + std::to_string(l.var);
}

BoolFunc::BoolFunc(int n) : n_(n) {
  if (n < 1 || n > kMaxVars)
    throw InputError("variable count must lie in [1, 24], got " +
                     std::to_string(n));
  const std::uint64_t bits = std::uint64_t{1} << n;
  words_.assign((bits + 63) / 64, 0);
}

void BoolFunc::mask_tail() {
  if (n_ < 6) words_[0] &= (std::uint64_t{1} << (std::uint64_t{1} << n_)) - 1;
}

BoolFunc BoolFunc::constant(int n, bool value) {
  BoolFunc f(n);
  if (value) {
    for (auto& w : f.words_) w = ~std::uint64_t{0};
    f.mask_tail();
  }
  return f;
}

BoolFunc BoolFunc::literal(int n, Literal l) {
  if (l.var < 1 || l.var > n)
    throw InputError("literal " + to_string(l) + " out of range for n=" +
                     std::to_string(n));
  BoolFunc f(n);
  const int shift = n - l.var;
  for (std::uint64_t a = 0; a < f.size(); ++a) {
    bool v = (a >> shift) & 1U;
    if (v != l.negated) f.words_[a >> 6] |= std::uint64_t{1} << (a & 63);
  }
  return f;
}

BoolFunc BoolFunc::from_word(int n, std::uint64_t table) {
  if (n > 6) throw InputError("from_word needs n <= 6");
  BoolFunc f(n);
  f.words_[0] = table;
  f.mask_tail();
  return f;
}

void BoolFunc::set(std::uint64_t index, bool value) {
  const std::uint64_t bit = std::uint64_t{1} << (index & 63);
  if (value)
    words_[index >> 6] |= bit;
  else
    words_[index >> 6] &= ~bit;
}

bool BoolFunc::evaluate(const std::vector<bool>& assignment) const {
  if (static_cast<int>(assignment.size()) != n_)
    throw InputError("assignment has " + std::to_string(assignment.size()) +
                     " bits, expected " + std::to_string(n_));
  std::uint64_t a = 0;
  for (bool b : assignment) a = (a << 1) | (b ? 1U : 0U);
  return at(a);
}

bool BoolFunc::is_essential(int i) const {
  const std::uint64_t stride = std::uint64_t{1} << (n_ - i);
  for (std::uint64_t a = 0; a < size(); ++a) {
    if (a & stride) continue;
    if (at(a) != at(a | stride)) return true;
  }
  return false;
}

std::vector<int> BoolFunc::essential_vars() const {
  std::vector<int> out;
  for (int i = 1; i <= n_; ++i)
    if (is_essential(i)) out.push_back(i);
  return out;
}

bool BoolFunc::is_true() const { return *this == constant(n_, true); }

bool BoolFunc::is_false() const {
  for (auto w : words_)
    if (w) return false;
  return true;
}

bool BoolFunc::is_constant() const { return is_true() || is_false(); }

BoolFunc BoolFunc::negate() const {
  BoolFunc f = *this;
  for (auto& w : f.words_) w = ~w;
  f.mask_tail();
  return f;
}

BoolFunc BoolFunc::operator&(const BoolFunc& o) const {
  if (o.n_ != n_) throw InputError("variable count mismatch");
  BoolFunc f = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) f.words_[i] &= o.words_[i];
  return f;
}

BoolFunc BoolFunc::operator|(const BoolFunc& o) const {
  if (o.n_ != n_) throw InputError("variable count mismatch");
  BoolFunc f = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) f.words_[i] |= o.words_[i];
  return f;
}

std::string BoolFunc::serialize() const {
  static const char* digits = "0123456789abcdef";
  const std::uint64_t bits = size();
  const std::uint64_t nibbles = bits < 4 ? 1 : bits / 4;
  std::string hex;
  hex.reserve(nibbles);
  for (std::uint64_t k = nibbles; k-- > 0;) {
    unsigned v = 0;
    for (int b = 3; b >= 0; --b) {
      std::uint64_t idx = 4 * k + b;
      v = (v << 1) | (idx < bits && at(idx) ? 1U : 0U);
    }
    hex.push_back(digits[v]);
  }
  return "n:" + std::to_string(n_) + ":" + hex;
}

BoolFunc BoolFunc::parse(const std::string& text) {
  if (text.rfind("n:", 0) != 0) throw InputError("bad function: " + text);
  auto colon = text.find(':', 2);
  if (colon == std::string::npos) throw InputError("bad function: " + text);
  int n = 0;
  try {
    n = std::stoi(text.substr(2, colon - 2));
  } catch (const std::exception&) {
    throw InputError("bad variable count in: " + text);
  }
  BoolFunc f(n);
  std::string hex = text.substr(colon + 1);
  const std::uint64_t bits = f.size();
  const std::uint64_t nibbles = bits < 4 ? 1 : bits / 4;
  if (hex.size() != nibbles)
    throw InputError("expected " + std::to_string(nibbles) +
                     " hex digits in: " + text);
  for (std::uint64_t k = 0; k < nibbles; ++k) {
    char c = hex[nibbles - 1 - k];
    unsigned v;
    if (c >= '0' && c <= '9')
      v = c - '0';
    else if (c >= 'a' && c <= 'f')
      v = c - 'a' + 10;
    else
      throw InputError("bad hex digit in: " + text);
    for (int b = 0; b < 4; ++b) {
      std::uint64_t idx = 4 * k + b;
      bool bit = (v >> b) & 1U;
      if (idx >= bits) {
        if (bit) throw InputError("table bits beyond 2^n in: " + text);
        continue;
      }
      f.set(idx, bit);
    }
  }
  return f;
}

std::size_t BoolFunc::hash() const {
  std::size_t h = static_cast<std::size_t>(n_) * 0x9e3779b97f4a7c15ULL;
  for (auto w : words_) h = (h ^ w) * 0x100000001b3ULL + (h >> 29);
  return h;
}

std::uint64_t full_word(int n) {
  return n >= 6 ? ~std::uint64_t{0}
                : (std::uint64_t{1} << (std::uint64_t{1} << n)) - 1;
}

std::uint64_t var_word(int n, int i) { return BoolFunc::variable(n, i).word(); }

}  // namespace boolform
