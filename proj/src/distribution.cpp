#include "boolform/enumerate.hpp"

#include <json.hpp>
#include <omp.h>

#include <sstream>
#include <unordered_map>

namespace boolform {

namespace {

using BigDist = std::map<std::uint64_t, BigInt>;

void add(BigDist& d, std::uint64_t f, const BigInt& c) {
  if (c == 0) return;
  auto [it, fresh] = d.try_emplace(f, c);
  if (!fresh) it->second += c;
}

BigDist combine(const BigDist& a, const BigDist& b, Conn c) {
  BigDist out;
  for (const auto& [fa, ca] : a)
    for (const auto& [fb, cb] : b) add(out, c == Conn::And ? (fa & fb) : (fa | fb), ca * cb);
  return out;
}

void merge_into(BigDist& dst, const BigDist& src) {
  for (const auto& [f, c] : src) add(dst, f, c);
}

BigDist dual(const BigDist& d, std::uint64_t full) {
  BigDist out;
  for (const auto& [f, c] : d) out.emplace(~f & full, c);
  return out;
}

BigInt multichoose(const BigInt& c, int j) {
  BigInt num = 1, den = 1;
  for (int i = 0; i < j; ++i) {
    num *= c + i;
    den *= i + 1;
  }
  return num / den;
}

}  // namespace

std::map<std::uint64_t, BigInt> distribution_words_dp(Model model, int m, int n) {
  if (m < 1) throw InputError("size must be >= 1");
  WordEvaluator ev(n);
  const std::uint64_t full = ev.full();
  std::vector<BigDist> d(m + 1);
  for (int code = 0; code < 2 * n; ++code) add(d[1], ev.literal(static_cast<std::uint8_t>(code)), 1);

  switch (model) {
    case Model::Catalan:
      for (int s = 2; s <= m; ++s)
        for (int i = 1; i < s; ++i)
          for (Conn c : {Conn::And, Conn::Or}) merge_into(d[s], combine(d[i], d[s - i], c));
      break;
    case Model::Comm:
      for (int s = 2; s <= m; ++s) {
        for (Conn c : {Conn::And, Conn::Or}) {
          for (int i = 1; 2 * i < s; ++i) merge_into(d[s], combine(d[i], d[s - i], c));
          if (s % 2 == 0) {
            const BigDist& h = d[s / 2];
            for (auto a = h.begin(); a != h.end(); ++a) {
              add(d[s], a->first, a->second * (a->second + 1) / 2);
              for (auto b = std::next(a); b != h.end(); ++b)
                add(d[s], c == Conn::And ? (a->first & b->first) : (a->first | b->first),
                    a->second * b->second);
            }
          }
        }
      }
      break;
    case Model::Assoc: {
      // and-rooted trees; or-rooted ones follow by duality.
      std::vector<BigDist> x(m + 1), seq(m + 1);
      x[1] = d[1];
      seq[1] = d[1];
      for (int s = 2; s <= m; ++s) {
        BigDist rooted;
        for (int i = 1; i < s; ++i) merge_into(rooted, combine(x[i], seq[s - i], Conn::And));
        BigDist other = dual(rooted, full);
        d[s] = rooted;
        merge_into(d[s], other);
        x[s] = other;
        seq[s] = other;
        merge_into(seq[s], rooted);
      }
      break;
    }
    case Model::AssocComm: {
      // w[t]: multisets of children allowed under an and-node, total size t,
      // keyed by their conjunction.
      std::vector<BigDist> x(m + 1), w(m + 1);
      add(w[0], full, 1);
      auto fold = [&](int s) {
        for (const auto& [f, c] : x[s]) {
          for (int t = m; t >= s; --t) {
            BigDist extra;
            for (int j = 1; j * s <= t; ++j) {
              const BigInt ways = multichoose(c, j);
              for (const auto& [g, cg] : w[t - j * s]) add(extra, g & f, ways * cg);
            }
            merge_into(w[t], extra);
          }
        }
      };
      x[1] = d[1];
      fold(1);
      for (int s = 2; s <= m; ++s) {
        const BigDist rooted = w[s];
        BigDist other = dual(rooted, full);
        d[s] = rooted;
        merge_into(d[s], other);
        x[s] = other;
        fold(s);
      }
      break;
    }
  }
  return d[m];
}

namespace {

template <class Tally>
void visit_words(const TreeSource& src, const WordEvaluator& ev, std::size_t part,
                 Tally& tally) {
  src.visit_part(part, [&](const FlatTree& t) { tally(ev.eval(t)); });
}

bool dense_ok(int n) { return n <= 4; }

}  // namespace

WordCounts distribution_words_serial(Model model, int m, int n) {
  TreeSource src(model, m, n);
  WordEvaluator ev(n);
  WordCounts out;
  if (dense_ok(n)) {
    std::vector<std::uint64_t> dense(std::size_t{1} << (1U << n), 0);
    auto tally = [&](std::uint64_t f) { ++dense[f]; };
    for (std::size_t p = 0; p < src.parts(); ++p) visit_words(src, ev, p, tally);
    for (std::size_t f = 0; f < dense.size(); ++f)
      if (dense[f]) out.emplace(f, dense[f]);
  } else {
    std::unordered_map<std::uint64_t, std::uint64_t> h;
    auto tally = [&](std::uint64_t f) { ++h[f]; };
    for (std::size_t p = 0; p < src.parts(); ++p) visit_words(src, ev, p, tally);
    out.insert(h.begin(), h.end());
  }
  return out;
}

WordCounts distribution_words_parallel(Model model, int m, int n) {
  TreeSource src(model, m, n);
  WordEvaluator ev(n);
  WordCounts out;
  const auto parts = static_cast<std::int64_t>(src.parts());
#pragma omp parallel
  {
    std::unordered_map<std::uint64_t, std::uint64_t> h;
    std::vector<std::uint64_t> dense;
    if (dense_ok(n)) dense.assign(std::size_t{1} << (1U << n), 0);
    auto tally = [&](std::uint64_t f) {
      if (!dense.empty())
        ++dense[f];
      else
        ++h[f];
    };
#pragma omp for schedule(dynamic)
    for (std::int64_t p = 0; p < parts; ++p)
      visit_words(src, ev, static_cast<std::size_t>(p), tally);
    for (std::size_t f = 0; f < dense.size(); ++f)
      if (dense[f]) h[f] += dense[f];
#pragma omp critical
    for (const auto& [f, c] : h) out[f] += c;
  }
  return out;
}

Distribution distribution(Model model, int m, int n, DistributionMethod method,
                          std::uint64_t cap) {
  if (n < 1 || n > 6) throw InputError("distributions need 1 <= n <= 6");
  if (method == DistributionMethod::Auto)
    method = count_trees(model, m, n) <= cap ? DistributionMethod::ExhaustiveParallel
                                             : DistributionMethod::DynamicProgramming;
  Distribution d;
  d.model = model;
  d.m = m;
  d.n = n;
  d.total = 0;
  auto put = [&](std::uint64_t word, const BigInt& c) {
    d.counts.emplace(BoolFunc::from_word(n, word), c);
    d.total += c;
  };
  if (method == DistributionMethod::DynamicProgramming) {
    for (const auto& [f, c] : distribution_words_dp(model, m, n)) put(f, c);
    return d;
  }
  check_cap(model, m, n, cap);
  WordCounts w = method == DistributionMethod::ExhaustiveSerial
                     ? distribution_words_serial(model, m, n)
                     : distribution_words_parallel(model, m, n);
  for (const auto& [f, c] : w) put(f, BigInt(c));
  return d;
}

BigInt Distribution::count(const BoolFunc& f) const {
  auto it = counts.find(f);
  return it == counts.end() ? BigInt(0) : it->second;
}

std::string Distribution::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = "boolform/v1";
  j["model"] = model_name(model);
  j["m"] = m;
  j["n"] = n;
  j["total"] = total.str();
  auto entries = nlohmann::ordered_json::array();
  for (const auto& [f, c] : counts)
    entries.push_back({{"function", f.serialize()}, {"count", c.str()}});
  j["entries"] = entries;
  return j.dump(2);
}

std::string Distribution::to_csv() const {
  std::ostringstream os;
  os << "model,m,n,total,function,count\n";
  for (const auto& [f, c] : counts)
    os << model_name(model) << ',' << m << ',' << n << ',' << total.str() << ','
       << f.serialize() << ',' << c.str() << '\n';
  return os.str();
}

}  // namespace boolform
