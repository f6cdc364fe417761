#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace boolform {

inline constexpr int kMaxVars = 24;

struct Literal {
  int var = 1;  // 1-based variable index
  bool negated = false;

  Literal negate() const { return {var, !negated}; }
  // Dense code 2*(var-1)+negated, handy as an array index.
  int code() const { return 2 * (var - 1) + (negated ? 1 : 0); }
  static Literal from_code(int c) { return {c / 2 + 1, (c & 1) != 0}; }

  friend bool operator==(const Literal&, const Literal&) = default;
  friend auto operator<=>(const Literal&, const Literal&) = default;
};

std::string to_string(const Literal& l);

// Truth table of a Boolean function on n variables. Entry a (0 <= a < 2^n)
// holds f at the assignment whose bits, read with x1 as the most significant
// bit, spell a.
class BoolFunc {
 public:
  BoolFunc() = default;
  static BoolFunc constant(int n, bool value);
  static BoolFunc literal(int n, Literal l);
  static BoolFunc variable(int n, int i) { return literal(n, {i, false}); }
  // Build from the low 2^n bits of a word (n <= 6).
  static BoolFunc from_word(int n, std::uint64_t table);

  int vars() const { return n_; }
  std::uint64_t size() const { return std::uint64_t{1} << n_; }

  bool at(std::uint64_t index) const {
    return (words_[index >> 6] >> (index & 63)) & 1U;
  }
  void set(std::uint64_t index, bool value);

  // assignment[i-1] is the value of x_i.
  bool evaluate(const std::vector<bool>& assignment) const;

  std::vector<int> essential_vars() const;
  bool is_essential(int i) const;
  bool is_constant() const;
  bool is_true() const;
  bool is_false() const;

  BoolFunc negate() const;
  BoolFunc operator&(const BoolFunc& o) const;
  BoolFunc operator|(const BoolFunc& o) const;

  // Low word of the table; exact for n <= 6.
  std::uint64_t word() const { return words_.empty() ? 0 : words_[0]; }

  // "n:<count>:<hex>", most significant table bit first.
  std::string serialize() const;
  static BoolFunc parse(const std::string& text);

  friend bool operator==(const BoolFunc&, const BoolFunc&) = default;
  friend auto operator<=>(const BoolFunc& a, const BoolFunc& b) {
    if (a.n_ != b.n_) return a.n_ <=> b.n_;
    return a.words_ <=> b.words_;
  }

  std::size_t hash() const;

 private:
  BoolFunc(int n);
  void mask_tail();

  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

// Bit mask of the table of x_i for n <= 6 variables.
std::uint64_t var_word(int n, int i);
std::uint64_t full_word(int n);

}  // namespace boolform

template <>
struct std::hash<boolform::BoolFunc> {
  std::size_t operator()(const boolform::BoolFunc& f) const { return f.hash(); }
};
