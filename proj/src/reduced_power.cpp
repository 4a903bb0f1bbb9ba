#include "redpow/reduced_power.hpp"

#include <algorithm>

namespace redpow {

namespace {

void require_same_length(const SeqPrefix& f, const SeqPrefix& g) {
  if (f.length() != g.length()) {
    throw LengthMismatch("prefix lengths differ: " + std::to_string(f.length()) + " vs " + std::to_string(g.length()));
  }
  if (f.length() == 0) throw std::invalid_argument("empty sequence prefix");
}

std::uint64_t nth_prime(std::size_t n) {
  static std::vector<std::uint64_t> primes{2};
  while (primes.size() <= n) {
    std::uint64_t c = primes.back() + 1;
    for (;; ++c) {
      bool prime = true;
      for (auto p : primes) {
        if (p * p > c) break;
        if (c % p == 0) {
          prime = false;
          break;
        }
      }
      if (prime) break;
    }
    primes.push_back(c);
  }
  return primes[n];
}

bool catalog_contains(RegularFamily::Kind kind, std::size_t n, std::uint64_t k) {
  switch (kind) {
    case RegularFamily::Kind::Tails: return k >= n;
    case RegularFamily::Kind::Diagonal: return k == n || k >= 2 * n;
    case RegularFamily::Kind::Constant: return true;
    default: return false;
  }
}

}  // namespace

std::optional<EqCertificate> eq_mod_cofinite(const SeqPrefix& f, const SeqPrefix& g) {
  require_same_length(f, g);
  std::size_t n0 = f.length();
  while (n0 > 0 && f[n0 - 1] == g[n0 - 1]) --n0;
  if (n0 == f.length()) return std::nullopt;
  return EqCertificate{EqCertificate::Kind::CofiniteTail, n0, std::nullopt, f.length()};
}

std::optional<std::size_t> le_mod_cofinite(const SeqPrefix& f, const SeqPrefix& g) {
  require_same_length(f, g);
  std::size_t n0 = f.length();
  while (n0 > 0 && f[n0 - 1] <= g[n0 - 1]) --n0;
  if (n0 == f.length()) return std::nullopt;
  return n0;
}

RegularFamily RegularFamily::tails() { return RegularFamily{}; }

RegularFamily RegularFamily::diagonal() {
  RegularFamily d;
  d.kind_ = Kind::Diagonal;
  return d;
}

RegularFamily RegularFamily::arithmetic(std::uint32_t offset) {
  RegularFamily d;
  d.kind_ = Kind::Arithmetic;
  d.offset_ = offset;
  return d;
}

RegularFamily RegularFamily::constant() {
  RegularFamily d;
  d.kind_ = Kind::Constant;
  return d;
}

RegularFamily RegularFamily::custom(std::vector<ExplicitSet> sets, std::optional<Kind> tail) {
  if (tail && (*tail == Kind::Custom || *tail == Kind::Arithmetic)) {
    throw std::invalid_argument("custom family tail must be tails, diagonal, constant or empty");
  }
  RegularFamily d;
  d.kind_ = Kind::Custom;
  for (auto& s : sets) std::sort(s.elements.begin(), s.elements.end());
  d.sets_ = std::move(sets);
  d.tail_ = tail;
  return d;
}

RegularFamily RegularFamily::from_id(const std::string& id) {
  if (id == "tails") return tails();
  if (id == "diagonal") return diagonal();
  if (id == "constant") return constant();
  if (id.rfind("arithmetic", 0) == 0) {
    if (id == "arithmetic") return arithmetic(0);
    if (id.size() > 11 && id[10] == ':') {
      try {
        return arithmetic(static_cast<std::uint32_t>(std::stoul(id.substr(11))));
      } catch (const std::exception&) {
      }
    }
  }
  throw std::invalid_argument("unknown family '" + id + "' (expected tails, diagonal, arithmetic:k, constant)");
}

std::string RegularFamily::id() const {
  switch (kind_) {
    case Kind::Tails: return "tails";
    case Kind::Diagonal: return "diagonal";
    case Kind::Arithmetic: return "arithmetic:" + std::to_string(offset_);
    case Kind::Constant: return "constant";
    case Kind::Custom: return "custom";
  }
  return "?";
}

bool RegularFamily::contains(std::size_t n, std::uint64_t k) const {
  switch (kind_) {
    case Kind::Arithmetic: return k > 0 && k % nth_prime(n + offset_) == 0;
    case Kind::Custom: {
      if (n < sets_.size()) {
        const auto& s = sets_[n];
        if (s.from && k >= *s.from) return true;
        return std::binary_search(s.elements.begin(), s.elements.end(), k);
      }
      return tail_ ? catalog_contains(*tail_, n, k) : false;
    }
    default: return catalog_contains(kind_, n, k);
  }
}

std::vector<bool> RegularFamily::materialize(std::size_t n, std::size_t length) const {
  std::vector<bool> bits(length);
  for (std::size_t k = 0; k < length; ++k) bits[k] = contains(n, k);
  return bits;
}

RegularCheck eq_mod_regular(const SeqPrefix& f, const SeqPrefix& g, const RegularFamily& family, std::size_t n0,
                            std::size_t n1_limit) {
  require_same_length(f, g);
  RegularCheck out;
  for (std::size_t k = n0; k < f.length(); ++k) {
    if (f[k] != g[k]) {
      out.status = RegularCheck::Status::Refuted;
      out.disagreement = k;
      return out;
    }
  }
  for (std::size_t n1 = 0; n1 <= n1_limit; ++n1) {
    bool avoids = true;
    for (std::size_t k = 0; k <= n0 && avoids; ++k) avoids = !family.contains(n1, k);
    if (!avoids) continue;
    for (std::size_t k = 0; k < f.length(); ++k) {
      if (family.contains(n1, k) && f[k] != g[k]) {
        out.status = RegularCheck::Status::Refuted;
        out.disagreement = k;
        return out;
      }
    }
    out.status = RegularCheck::Status::Certified;
    out.certificate = EqCertificate{EqCertificate::Kind::RegularFamily, n0, n1, f.length()};
    return out;
  }
  out.status = RegularCheck::Status::NoMemberWithinLimit;
  return out;
}

PointFinitenessReport check_point_finiteness(const RegularFamily& family, std::size_t length, std::size_t n_max) {
  PointFinitenessReport r{length, n_max, {}, {}};
  for (std::size_t k = 0; k < length; ++k) {
    PointMembership pm{k, {}, false};
    for (std::size_t n = 0; n <= n_max; ++n) {
      if (family.contains(n, k)) pm.members.push_back(n);
    }
    pm.still_growing = family.contains(n_max, k);
    r.points.push_back(std::move(pm));
  }
  for (std::size_t n = 0; n <= n_max; ++n) {
    bool any = false;
    for (std::size_t k = 0; k < length && !any; ++k) any = family.contains(n, k);
    if (!any) r.empty_on_prefix.push_back(n);
  }
  return r;
}

}  // namespace redpow
