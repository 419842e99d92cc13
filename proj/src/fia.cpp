#include "incalg/fia.hpp"

#include <algorithm>
#include <numeric>

namespace incalg {

ContextPtr make_context(Poset poset, Field field) {
  auto ctx = std::make_shared<FiaContext>(FiaContext{std::move(poset), field, {}, {}, {}});
  const Poset& p = ctx->poset;
  const std::size_t n = p.size();
  ctx->index.assign(n * n, kNoInterval);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (p.leq(x, y)) {
        ctx->index[x * n + y] = ctx->intervals.size();
        ctx->intervals.emplace_back(x, y);
      }
  ctx->terms.resize(ctx->intervals.size());
  for (std::size_t k = 0; k < ctx->intervals.size(); ++k) {
    auto [x, y] = ctx->intervals[k];
    for (Element z = 0; z < n; ++z)
      if (p.leq(x, z) && p.leq(z, y)) ctx->terms[k].emplace_back(ctx->idx(x, z), ctx->idx(z, y));
  }
  return ctx;
}

void check_same_context(const ContextPtr& a, const ContextPtr& b) {
  if (a == b) return;
  if (!a || !b || !(a->field == b->field) || !(a->poset == b->poset))
    fail(ErrorKind::ContextMismatch, "elements of different incidence algebras");
}

IncFn::IncFn(ContextPtr ctx) : ctx_(std::move(ctx)), v_(ctx_->dim(), ctx_->field.zero()) {}

IncFn::IncFn(ContextPtr ctx, Vector values) : ctx_(std::move(ctx)), v_(std::move(values)) {
  if (v_.size() != ctx_->dim()) fail(ErrorKind::ContextMismatch, "value vector has wrong length");
}

IncFn IncFn::delta(const ContextPtr& ctx) {
  IncFn f(ctx);
  for (Element x = 0; x < ctx->poset.size(); ++x) f.v_[ctx->idx(x, x)] = ctx->field.one();
  return f;
}

IncFn IncFn::e(const ContextPtr& ctx, Element x, Element y) {
  const Poset& p = ctx->poset;
  if (x >= p.size() || y >= p.size()) fail(ErrorKind::UnknownLabel, "element index out of range");
  if (!p.leq(x, y)) fail(ErrorKind::NotComparable, p.label(x) + " is not below " + p.label(y));
  IncFn f(ctx);
  f.v_[ctx->idx(x, y)] = ctx->field.one();
  return f;
}

IncFn IncFn::random(const ContextPtr& ctx, std::mt19937_64& rng) {
  IncFn f(ctx);
  for (auto& s : f.v_) s = ctx->field.random(rng);
  return f;
}

IncFn IncFn::random_unit(const ContextPtr& ctx, std::mt19937_64& rng) {
  IncFn f = random(ctx, rng);
  for (Element x = 0; x < ctx->poset.size(); ++x) f.v_[ctx->idx(x, x)] = ctx->field.random_nonzero(rng);
  return f;
}

Scalar IncFn::at(Element x, Element y) const {
  std::size_t k = ctx_->idx(x, y);
  return k == kNoInterval ? ctx_->field.zero() : v_[k];
}

void IncFn::set(Element x, Element y, Scalar s) {
  std::size_t k = ctx_->idx(x, y);
  if (k == kNoInterval) fail(ErrorKind::NotComparable, poset().label(x) + " is not below " + poset().label(y));
  v_[k] = std::move(s);
}

void IncFn::check(const IncFn& o) const { check_same_context(ctx_, o.ctx_); }

IncFn IncFn::operator*(const IncFn& o) const {
  check(o);
  IncFn out(ctx_);
  for (std::size_t k = 0; k < v_.size(); ++k) {
    Scalar acc = ctx_->field.zero();
    for (auto [a, b] : ctx_->terms[k])
      if (!v_[a].is_zero() && !o.v_[b].is_zero()) acc += v_[a] * o.v_[b];
    out.v_[k] = std::move(acc);
  }
  return out;
}

IncFn IncFn::operator+(const IncFn& o) const {
  check(o);
  IncFn out = *this;
  for (std::size_t k = 0; k < v_.size(); ++k) out.v_[k] += o.v_[k];
  return out;
}

IncFn IncFn::operator-(const IncFn& o) const {
  check(o);
  IncFn out = *this;
  for (std::size_t k = 0; k < v_.size(); ++k) out.v_[k] -= o.v_[k];
  return out;
}

IncFn IncFn::operator-() const {
  IncFn out = *this;
  for (auto& s : out.v_) s = -s;
  return out;
}

IncFn IncFn::scaled(const Scalar& k) const {
  IncFn out = *this;
  for (auto& s : out.v_) s *= k;
  return out;
}

IncFn IncFn::hadamard(const IncFn& o) const {
  check(o);
  IncFn out = *this;
  for (std::size_t k = 0; k < v_.size(); ++k) out.v_[k] *= o.v_[k];
  return out;
}

bool IncFn::is_zero() const {
  return std::all_of(v_.begin(), v_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool IncFn::is_unit() const {
  for (Element x = 0; x < poset().size(); ++x)
    if (v_[ctx_->idx(x, x)].is_zero()) return false;
  return true;
}

bool IncFn::is_diagonal() const {
  for (std::size_t k = 0; k < v_.size(); ++k)
    if (ctx_->intervals[k].first != ctx_->intervals[k].second && !v_[k].is_zero()) return false;
  return true;
}

IncFn IncFn::inverse() const {
  const Poset& p = poset();
  const std::size_t n = p.size();
  std::vector<Scalar> dinv(n);
  for (Element x = 0; x < n; ++x) {
    const Scalar& d = v_[ctx_->idx(x, x)];
    if (d.is_zero()) fail(ErrorKind::NotAUnit, "f(" + p.label(x) + "," + p.label(x) + ") = 0");
    dinv[x] = d.inverse();
  }
  // g(x,y) = -f(x,x)^{-1} sum_{x<z<=y} f(x,z) g(z,y); process intervals by
  // increasing length so that every g(z,y) needed is already known.
  std::vector<std::size_t> order(v_.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return ctx_->terms[a].size() < ctx_->terms[b].size(); });
  IncFn g(ctx_);
  for (std::size_t k : order) {
    auto [x, y] = ctx_->intervals[k];
    if (x == y) {
      g.v_[k] = dinv[x];
      continue;
    }
    Scalar acc = ctx_->field.zero();
    for (auto [a, b] : ctx_->terms[k]) {
      if (ctx_->intervals[a].first == ctx_->intervals[a].second) continue;  // z = x
      if (!v_[a].is_zero()) acc += v_[a] * g.v_[b];
    }
    g.v_[k] = -(dinv[x] * acc);
  }
  return g;
}

bool operator==(const IncFn& a, const IncFn& b) {
  check_same_context(a.ctx_, b.ctx_);
  return a.v_ == b.v_;
}

std::vector<IncFn> center_basis(const ContextPtr& ctx) {
  std::vector<IncFn> out;
  for (const auto& comp : ctx->poset.components()) {
    IncFn f(ctx);
    for (Element x : comp) f[ctx->idx(x, x)] = ctx->field.one();
    out.push_back(std::move(f));
  }
  return out;
}

bool is_central(const IncFn& f) {
  const auto& ctx = f.context();
  for (std::size_t k = 0; k < ctx->dim(); ++k) {
    auto [x, y] = ctx->intervals[k];
    IncFn e = IncFn::e(ctx, x, y);
    if (f * e != e * f) return false;
  }
  return true;
}

}  // namespace incalg
