// Matrix group closure on a packed integer encoding: every entry coordinate is
// stored as an int32 multiple of 1/den, where den is grown until products stay
// integral.
#include "exactgrp/group.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <thread>

namespace exactgrp {

namespace {

constexpr char const *kCacheMagic = "exactgrp-group-cache";
constexpr int kCacheVersion = 1;

struct DenGrowth {
  long den;
};

uint64_t fnv1a(std::string const &s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(uint64_t x) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
  return buf;
}

uint64_t hash_ints(int32_t const *p, size_t len) {
  uint64_t h = 0x9E3779B97F4A7C15ull;
  for (size_t k = 0; k < len; ++k) {
    h ^= static_cast<uint32_t>(p[k]);
    h *= 0xff51afd7ed558ccdull;
    h ^= h >> 32;
  }
  return h;
}

template <int NC, bool QUAT>
bool kernel(int n, long den, int32_t const *A, int32_t const *B, int32_t *C, long *bad) {
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int64_t d[7] = {0, 0, 0, 0, 0, 0, 0};
      for (int k = 0; k < n; ++k) {
        int32_t const *a = A + (static_cast<size_t>(i) * n + k) * NC;
        int32_t const *b = B + (static_cast<size_t>(k) * n + j) * NC;
        if constexpr (NC == 1) {
          d[0] += static_cast<int64_t>(a[0]) * b[0];
        } else {
          if (!(a[0] | a[1] | a[2] | a[3]) || !(b[0] | b[1] | b[2] | b[3]))
            continue;
          int64_t a0 = a[0], a1 = a[1], a2 = a[2], a3 = a[3];
          int64_t b0 = b[0], b1 = b[1], b2 = b[2], b3 = b[3];
          if constexpr (QUAT) {
            d[0] += a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3;
            d[1] += a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2;
            d[2] += a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1;
            d[3] += a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0;
          } else {
            d[0] += a0 * b0;
            d[1] += a0 * b1 + a1 * b0;
            d[2] += a0 * b2 + a1 * b1 + a2 * b0;
            d[3] += a0 * b3 + a1 * b2 + a2 * b1 + a3 * b0;
            d[4] += a1 * b3 + a2 * b2 + a3 * b1;
            d[5] += a2 * b3 + a3 * b2;
            d[6] += a3 * b3;
          }
        }
      }
      if constexpr (NC == 4 && !QUAT) {
        d[0] -= d[6];
        d[3] += d[5];
        d[1] -= d[5];
        d[2] += d[4];
        d[0] -= d[4];
      }
      int32_t *c = C + (static_cast<size_t>(i) * n + j) * NC;
      for (int t = 0; t < NC; ++t) {
        if (d[t] % den != 0) {
          *bad = d[t];
          return false;
        }
        c[t] = static_cast<int32_t>(d[t] / den);
      }
    }
  return true;
}

template <class S> Domain domain_of();
template <> Domain domain_of<CycNum>() { return Domain::Cyc; }
template <> Domain domain_of<QuatNum>() { return Domain::Quat; }

}  // namespace

struct FinMatGroup::Impl {
  static size_t stride(FinMatGroup const &g) { return static_cast<size_t>(g.n_) * g.n_ * g.nc_; }

  static bool mul_raw(FinMatGroup const &g, int32_t const *a, int32_t const *b, int32_t *c, long *bad) {
    if (g.nc_ == 1)
      return kernel<1, false>(g.n_, g.den_, a, b, c, bad);
    if (g.dom_ == Domain::Quat)
      return kernel<4, true>(g.n_, g.den_, a, b, c, bad);
    return kernel<4, false>(g.n_, g.den_, a, b, c, bad);
  }

  static int32_t const *elem(FinMatGroup const &g, int i) { return g.data_.data() + stride(g) * i; }

  static int lookup(FinMatGroup const &g, int32_t const *p) {
    if (g.slots_.empty())
      return -1;
    size_t st = stride(g);
    size_t mask = g.slots_.size() - 1;
    size_t h = hash_ints(p, st) & mask;
    while (true) {
      int32_t s = g.slots_[h];
      if (s < 0)
        return -1;
      if (std::equal(p, p + st, elem(g, s)))
        return s;
      h = (h + 1) & mask;
    }
  }

  static void place(FinMatGroup &g, int idx) {
    size_t mask = g.slots_.size() - 1;
    size_t h = hash_ints(elem(g, idx), stride(g)) & mask;
    while (g.slots_[h] >= 0)
      h = (h + 1) & mask;
    g.slots_[h] = idx;
  }

  static void rehash(FinMatGroup &g, size_t want) {
    size_t cap = 16;
    while (cap < 2 * want)
      cap <<= 1;
    g.slots_.assign(cap, -1);
    for (int i = 0; i < static_cast<int>(g.parent_.size()); ++i)
      place(g, i);
  }

  static int append(FinMatGroup &g, int32_t const *p, int parent, int gen) {
    int idx = static_cast<int>(g.parent_.size());
    g.data_.insert(g.data_.end(), p, p + stride(g));
    g.parent_.push_back(parent);
    g.gen_.push_back(gen);
    if (2 * g.parent_.size() > g.slots_.size())
      rehash(g, g.parent_.size() * 2);
    else
      place(g, idx);
    return idx;
  }

  template <class S> static std::vector<int32_t> pack(Matrix<S> const &m, int nc, long den, bool *ok) {
    std::vector<int32_t> out;
    *ok = true;
    for (auto const &e : m.entries())
      for (int t = 0; t < 4; ++t) {
        Rational x = e.coeff(t) * den;
        if (t >= nc) {
          if (e.coeff(t) != 0)
            *ok = false;
          continue;
        }
        if (x.get_den() != 1 || !x.get_num().fits_sint_p()) {
          *ok = false;
          out.push_back(0);
        } else {
          out.push_back(static_cast<int32_t>(x.get_num().get_si()));
        }
      }
    return out;
  }

  template <class S> static void setup(FinMatGroup &g, std::vector<Matrix<S>> const &gens) {
    if (gens.empty())
      throw std::invalid_argument("closure needs at least one generator");
    g.dom_ = domain_of<S>();
    g.n_ = gens[0].dim();
    bool rational = g.dom_ == Domain::Cyc;
    mpz_class den = 1;
    for (auto const &m : gens) {
      if (m.dim() != g.n_)
        throw DimensionMismatch();
      for (auto const &e : m.entries())
        for (int t = 0; t < 4; ++t) {
          if (t > 0 && e.coeff(t) != 0)
            rational = false;
          mpz_class d = e.coeff(t).get_den();
          mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
        }
    }
    g.nc_ = rational ? 1 : 4;
    g.den_ = den.get_si();
    g.fingerprint_ = fingerprint_of(gens);
  }

  template <class S> static void repack_gens(FinMatGroup &g, std::vector<Matrix<S>> const &gens) {
    g.gens_.clear();
    for (auto const &m : gens) {
      bool ok;
      g.gens_.push_back(pack(m, g.nc_, g.den_, &ok));
      if (!ok)
        throw std::runtime_error("generator does not fit the packed encoding");
    }
  }

  static std::vector<int32_t> identity_packed(FinMatGroup const &g) {
    std::vector<int32_t> id(stride(g), 0);
    for (int i = 0; i < g.n_; ++i)
      id[(static_cast<size_t>(i) * g.n_ + i) * g.nc_] = static_cast<int32_t>(g.den_);
    return id;
  }

  static void bfs(FinMatGroup &g, long max_order, int jobs) {
    size_t st = stride(g);
    g.data_.clear();
    g.parent_.clear();
    g.gen_.clear();
    g.slots_.assign(16, -1);
    auto id = identity_packed(g);
    append(g, id.data(), -1, -1);
    int ngen = static_cast<int>(g.gens_.size());
    std::vector<int> frontier{0};
    std::vector<int32_t> buf;
    constexpr size_t kBlock = 4096;
    while (!frontier.empty()) {
      std::vector<int> next;
      for (size_t lo = 0; lo < frontier.size(); lo += kBlock) {
        size_t hi = std::min(frontier.size(), lo + kBlock);
        size_t count = (hi - lo) * ngen;
        buf.assign(count * st, 0);
        std::vector<long> bad(std::max(1, jobs), 0);
        std::vector<char> fail(std::max(1, jobs), 0);
        auto work = [&](int tid, size_t a, size_t b) {
          for (size_t p = a; p < b; ++p) {
            int f = frontier[lo + p / ngen];
            int s = static_cast<int>(p % ngen);
            if (!mul_raw(g, elem(g, f), g.gens_[s].data(), buf.data() + p * st, &bad[tid])) {
              fail[tid] = 1;
              return;
            }
          }
        };
        if (jobs > 1 && count > 256) {
          std::vector<std::thread> th;
          size_t per = (count + jobs - 1) / jobs;
          for (int t = 0; t < jobs; ++t) {
            size_t a = t * per, b = std::min(count, a + per);
            if (a < b)
              th.emplace_back(work, t, a, b);
          }
          for (auto &x : th)
            x.join();
        } else {
          work(0, 0, count);
        }
        for (size_t t = 0; t < fail.size(); ++t)
          if (fail[t]) {
            mpz_class d2 = mpz_class(g.den_) * g.den_;
            mpz_class v = bad[t];
            mpz_class gg;
            mpz_gcd(gg.get_mpz_t(), v.get_mpz_t(), d2.get_mpz_t());
            mpz_class need = d2 / gg;
            mpz_class nd;
            mpz_class cur = g.den_;
            mpz_lcm(nd.get_mpz_t(), cur.get_mpz_t(), need.get_mpz_t());
            throw DenGrowth{nd.get_si()};
          }
        for (size_t p = 0; p < count; ++p) {
          int32_t const *q = buf.data() + p * st;
          if (lookup(g, q) >= 0)
            continue;
          if (static_cast<long>(g.parent_.size()) >= max_order)
            throw OrderExceeded("group order exceeds " + std::to_string(max_order));
          next.push_back(append(g, q, frontier[lo + p / ngen], static_cast<int>(p % ngen)));
        }
      }
      frontier = std::move(next);
    }
  }

  // identity first, the rest by canonical key
  static void canonical_sort(FinMatGroup &g) {
    int n = static_cast<int>(g.parent_.size());
    std::vector<std::string> keys(n);
    for (int i = 0; i < n; ++i)
      keys[i] = g.key(i);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin() + 1, order.end(), [&](int a, int b) { return keys[a] < keys[b]; });
    std::vector<int> where(n);
    for (int k = 0; k < n; ++k)
      where[order[k]] = k;
    size_t st = stride(g);
    std::vector<int32_t> data(g.data_.size());
    std::vector<int> parent(n), gen(n);
    for (int k = 0; k < n; ++k) {
      std::copy_n(g.data_.begin() + st * order[k], st, data.begin() + st * k);
      parent[k] = g.parent_[order[k]] < 0 ? -1 : where[g.parent_[order[k]]];
      gen[k] = g.gen_[order[k]];
    }
    g.data_ = std::move(data);
    g.parent_ = std::move(parent);
    g.gen_ = std::move(gen);
    rehash(g, n);
  }

  template <class S> static FinMatGroup closure(std::vector<Matrix<S>> const &gens, ClosureOptions opt) {
    FinMatGroup g;
    setup(g, gens);
    long max_order = opt.max_order > 0 ? opt.max_order : (g.dom_ == Domain::Cyc ? 1000 : 100000);
    while (true) {
      repack_gens(g, gens);
      try {
        bfs(g, max_order, std::max(1, opt.jobs));
        break;
      } catch (DenGrowth const &e) {
        g.den_ = e.den;
      }
    }
    canonical_sort(g);
    return g;
  }

  static std::string checksum(FinMatGroup const &g) {
    uint64_t h = 1469598103934665603ull;
    for (int i = 0; i < g.order(); ++i)
      h = h * 31 + fnv1a(g.key(i));
    return hex64(h);
  }

  template <class S> static FinMatGroup load(std::string const &path, std::vector<Matrix<S>> const &gens) {
    std::ifstream in(path);
    if (!in)
      throw CacheError("cannot open cache file " + path);
    auto expect = [&](std::string const &tag) {
      std::string t;
      if (!(in >> t) || t != tag)
        throw CacheError("corrupt cache file " + path);
    };
    FinMatGroup g;
    setup(g, gens);
    std::string magic, fp, dom;
    int version = 0;
    long n = 0;
    if (!(in >> magic >> version) || magic != kCacheMagic || version != kCacheVersion)
      throw CacheError("cache format mismatch in " + path);
    expect("fingerprint");
    in >> fp;
    if (fp != g.fingerprint_)
      throw CacheError("stale cache file " + path);
    expect("domain");
    in >> dom;
    expect("dim");
    in >> g.n_;
    expect("coords");
    in >> g.nc_;
    expect("den");
    in >> g.den_;
    expect("order");
    in >> n;
    if (!in || dom != (g.dom_ == Domain::Cyc ? "cyc" : "quat") || n <= 0 || g.den_ <= 0 ||
        (g.nc_ != 1 && g.nc_ != 4))
      throw CacheError("corrupt cache file " + path);
    repack_gens(g, gens);
    g.parent_.assign(n, -1);
    g.gen_.assign(n, -1);
    std::vector<std::vector<int>> kids(n);
    for (long i = 0; i < n; ++i) {
      if (!(in >> g.parent_[i] >> g.gen_[i]))
        throw CacheError("corrupt cache file " + path);
      bool root = i == 0;
      if (root != (g.parent_[i] < 0) || g.parent_[i] >= n || g.gen_[i] >= g.generator_count())
        throw CacheError("corrupt cache file " + path);
      if (!root)
        kids[g.parent_[i]].push_back(static_cast<int>(i));
    }
    std::string sum;
    expect("checksum");
    in >> sum;
    size_t st = stride(g);
    g.data_.assign(st * n, 0);
    auto id = identity_packed(g);
    std::copy(id.begin(), id.end(), g.data_.begin());
    std::vector<int> queue{0};
    long bad = 0;
    for (size_t k = 0; k < queue.size(); ++k)
      for (int c : kids[queue[k]]) {
        if (!mul_raw(g, elem(g, queue[k]), g.gens_[g.gen_[c]].data(), g.data_.data() + st * c, &bad))
          throw CacheError("corrupt cache file " + path);
        queue.push_back(c);
      }
    if (static_cast<long>(queue.size()) != n)
      throw CacheError("corrupt cache file " + path);
    g.slots_.clear();
    rehash(g, n);
    for (long i = 0; i < n; ++i)
      if (lookup(g, elem(g, static_cast<int>(i))) != i)
        throw CacheError("corrupt cache file " + path);
    for (long i = 2; i < n; ++i)
      if (!(g.key(static_cast<int>(i - 1)) < g.key(static_cast<int>(i))))
        throw CacheError("corrupt cache file " + path);
    if (sum != checksum(g))
      throw CacheError("corrupt cache file " + path);
    return g;
  }

  template <class S> static Matrix<S> unpack(FinMatGroup const &g, int i) {
    Matrix<S> m(g.n_);
    int32_t const *p = elem(g, i);
    for (int r = 0; r < g.n_; ++r)
      for (int c = 0; c < g.n_; ++c) {
        Rational x[4] = {0, 0, 0, 0};
        for (int t = 0; t < g.nc_; ++t) {
          x[t] = Rational(p[(static_cast<size_t>(r) * g.n_ + c) * g.nc_ + t], g.den_);
          x[t].canonicalize();
        }
        m(r, c) = S(x[0], x[1], x[2], x[3]);
      }
    return m;
  }

  template <class S> static int index_of(FinMatGroup const &g, Matrix<S> const &m) {
    if (m.dim() != g.n_)
      return -1;
    bool ok;
    auto p = pack(m, g.nc_, g.den_, &ok);
    if (!ok)
      return -1;
    return lookup(g, p.data());
  }

  template <class S> static std::string fingerprint(std::vector<Matrix<S>> const &gens) {
    std::string s = std::to_string(kCacheVersion) + "|" + (domain_of<S>() == Domain::Cyc ? "cyc" : "quat");
    for (auto const &m : gens)
      s += "|" + m.key();
    return hex64(fnv1a(s));
  }
};

FinMatGroup FinMatGroup::closure(std::vector<CycMatrix> const &gens, ClosureOptions opt) {
  return Impl::closure(gens, opt);
}
FinMatGroup FinMatGroup::closure(std::vector<QuatMatrix> const &gens, ClosureOptions opt) {
  return Impl::closure(gens, opt);
}

CycMatrix FinMatGroup::cyc(int i) const {
  if (dom_ != Domain::Cyc)
    throw std::logic_error("not a cyclotomic group");
  return Impl::unpack<CycNum>(*this, i);
}

QuatMatrix FinMatGroup::quat(int i) const {
  if (dom_ != Domain::Quat)
    throw std::logic_error("not a quaternionic group");
  return Impl::unpack<QuatNum>(*this, i);
}

std::string FinMatGroup::key(int i) const {
  int32_t const *p = Impl::elem(*this, i);
  std::string s;
  size_t entries = static_cast<size_t>(n_) * n_;
  for (size_t e = 0; e < entries; ++e) {
    if (e)
      s += ";";
    for (int t = 0; t < 4; ++t) {
      if (t)
        s += ",";
      if (t >= nc_) {
        s += "0";
        continue;
      }
      Rational x(p[e * nc_ + t], den_);
      x.canonicalize();
      s += rational_key(x);
    }
  }
  return s;
}

std::vector<int> FinMatGroup::word_path(int i) const {
  std::vector<int> w;
  while (parent_[i] >= 0) {
    w.push_back(gen_[i]);
    i = parent_[i];
  }
  std::reverse(w.begin(), w.end());
  return w;
}

int FinMatGroup::index_of(CycMatrix const &m) const {
  return dom_ == Domain::Cyc ? Impl::index_of(*this, m) : -1;
}
int FinMatGroup::index_of(QuatMatrix const &m) const {
  return dom_ == Domain::Quat ? Impl::index_of(*this, m) : -1;
}

int FinMatGroup::mul(int a, int b) const {
  if (table_)
    return table_->mul(a, b);
  std::vector<int32_t> out(Impl::stride(*this));
  long bad = 0;
  if (!Impl::mul_raw(*this, Impl::elem(*this, a), Impl::elem(*this, b), out.data(), &bad))
    return -1;
  return Impl::lookup(*this, out.data());
}

int FinMatGroup::inv(int a) const {
  if (table_)
    return table_->inv(a);
  int prev = 0, x = a;
  while (x != 0) {
    prev = x;
    x = mul(x, a);
    if (x < 0)
      return -1;
  }
  return prev;
}

int FinMatGroup::power(int a, long k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  int r = 0, base = a;
  while (k) {
    if (k & 1)
      r = mul(r, base);
    base = mul(base, base);
    k >>= 1;
  }
  return r;
}

std::shared_ptr<CayleyGroup const> FinMatGroup::cayley() const {
  std::lock_guard<std::mutex> lock(*table_mu_);
  if (!table_) {
    if (order() > 20000)
      throw OrderExceeded("multiplication table limited to order 20000");
    table_ = std::make_shared<CayleyGroup const>(
        CayleyGroup::from_mul(order(), [this](int a, int b) { return mul(a, b); }));
  }
  return table_;
}

int FinMatGroup::times_generator(int i, int s) const {
  std::vector<int32_t> buf(Impl::stride(*this));
  long bad = 0;
  if (!Impl::mul_raw(*this, Impl::elem(*this, i), gens_[s].data(), buf.data(), &bad))
    return -1;
  return Impl::lookup(*this, buf.data());
}

CycNum FinMatGroup::complex_trace(int i) const {
  int32_t const *p = Impl::elem(*this, i);
  CycNum t;
  for (int d = 0; d < n_; ++d) {
    int32_t const *e = p + (static_cast<size_t>(d) * n_ + d) * nc_;
    if (dom_ == Domain::Quat) {
      Rational x(2 * static_cast<long>(e[0]), den_);
      x.canonicalize();
      t += CycNum(x);
    } else {
      Rational x[4] = {0, 0, 0, 0};
      for (int k = 0; k < nc_; ++k) {
        x[k] = Rational(e[k], den_);
        x[k].canonicalize();
      }
      t += CycNum(x[0], x[1], x[2], x[3]);
    }
  }
  return t;
}

std::string FinMatGroup::fingerprint_of(std::vector<CycMatrix> const &gens) { return Impl::fingerprint(gens); }
std::string FinMatGroup::fingerprint_of(std::vector<QuatMatrix> const &gens) { return Impl::fingerprint(gens); }

void FinMatGroup::save(std::string const &path) const {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out)
      throw CacheError("cannot write cache file " + path);
    out << kCacheMagic << " " << kCacheVersion << "\n"
        << "fingerprint " << fingerprint_ << "\n"
        << "domain " << (dom_ == Domain::Cyc ? "cyc" : "quat") << "\n"
        << "dim " << n_ << "\n"
        << "coords " << nc_ << "\n"
        << "den " << den_ << "\n"
        << "order " << order() << "\n";
    for (int i = 0; i < order(); ++i)
      out << parent_[i] << " " << gen_[i] << "\n";
    out << "checksum " << Impl::checksum(*this) << "\n";
  }
  std::rename(tmp.c_str(), path.c_str());
}

FinMatGroup FinMatGroup::load(std::string const &path, std::vector<CycMatrix> const &gens) {
  return Impl::load(path, gens);
}
FinMatGroup FinMatGroup::load(std::string const &path, std::vector<QuatMatrix> const &gens) {
  return Impl::load(path, gens);
}

}  // namespace exactgrp
