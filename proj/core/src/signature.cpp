#include "equisym/signature.hpp"

#include <algorithm>

#include "equisym/numth.hpp"

namespace equisym {

Signature::Signature(int genus, std::vector<int> ms) : h(genus), periods(std::move(ms)) {
  if (h < 0) fail("signature with negative quotient genus");
  for (int m : periods)
    if (m < 2) fail("signature period " + std::to_string(m) + " < 2");
  std::sort(periods.begin(), periods.end());
}

bool Signature::operator<(const Signature& o) const {
  if (h != o.h) return h < o.h;
  return periods < o.periods;
}

std::string Signature::str() const {
  std::string s = std::to_string(h) + ";";
  if (periods.empty()) return s + "-";
  for (std::size_t i = 0; i < periods.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(periods[i]);
  }
  return s;
}

Signature Signature::parse(const std::string& text) {
  const auto semi = text.find(';');
  if (semi == std::string::npos) fail("signature '" + text + "' has no ';'");
  int h = 0;
  try {
    h = std::stoi(text.substr(0, semi));
  } catch (...) {
    fail("signature '" + text + "': bad quotient genus");
  }
  std::vector<int> ms;
  std::string rest = text.substr(semi + 1);
  if (rest != "-" && !rest.empty()) {
    std::size_t pos = 0;
    while (pos < rest.size()) {
      auto comma = rest.find(',', pos);
      if (comma == std::string::npos) comma = rest.size();
      try {
        ms.push_back(std::stoi(rest.substr(pos, comma - pos)));
      } catch (...) {
        fail("signature '" + text + "': bad period");
      }
      pos = comma + 1;
    }
  }
  return Signature(h, std::move(ms));
}

int teichmuller_dimension(const Signature& sig) { return 3 * sig.h - 3 + sig.l(); }

Rational rh_rhs(const Signature& sig, long long order) {
  Rational acc(2LL * sig.h - 2);
  for (int m : sig.periods) acc = acc + Rational(m - 1, m);
  return acc * Rational(order);
}

std::optional<long long> try_rh_genus(const Signature& sig, long long order) {
  const Rational rhs = rh_rhs(sig, order);  // = 2g - 2
  if (!rhs.is_integer()) return std::nullopt;
  if (rhs.num < 2 || rhs.num % 2 != 0) return std::nullopt;
  return (rhs.num + 2) / 2;
}

long long rh_genus(const Signature& sig, long long order) {
  if (order < 1) fail("rh_genus needs order >= 1");
  if (auto g = try_rh_genus(sig, order)) return *g;
  fail("(" + sig.str() + ", order " + std::to_string(order) +
       ") is not a surface-kernel-admissible pair: 2g-2 = " + rh_rhs(sig, order).str());
  return 0;  // unreachable
}

std::vector<Signature> enumerate_signatures(long long genus, long long order, int dim,
                                            int h_cap) {
  std::vector<Signature> out;
  if (genus < 2 || order < 1) return out;
  std::vector<int> period_pool;
  for (long long d : divisors(order))
    if (d >= 2) period_pool.push_back(int(d));

  const int h_max = std::min(h_cap, (dim + 3) / 3);
  for (int h = 0; h <= h_max; ++h) {
    const int l = dim + 3 - 3 * h;
    if (l < 0) continue;
    // Need sum_j (1 - 1/m_j) == target, periods ascending from the pool.
    const Rational target = Rational(2 * genus - 2, order) - Rational(2LL * h - 2);
    std::vector<int> chosen;
    auto rec = [&](auto&& self, std::size_t pool_from, int left, Rational remaining) -> void {
      if (left == 0) {
        if (remaining == Rational(0)) out.emplace_back(h, chosen);
        return;
      }
      // Even l copies of the largest term (1 - 1/order) cannot reach it.
      if (remaining > Rational(left) * Rational(order - 1, order)) return;
      for (std::size_t i = pool_from; i < period_pool.size(); ++i) {
        const int m = period_pool[i];
        const Rational term(m - 1, m);
        // All remaining terms are >= this one.
        if (Rational(left) * term > remaining) break;
        chosen.push_back(m);
        self(self, i, left - 1, remaining - term);
        chosen.pop_back();
      }
    };
    if (l == 0) {
      if (target == Rational(0)) out.emplace_back(h, std::vector<int>{});
    } else {
      rec(rec, 0, l, target);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace equisym
