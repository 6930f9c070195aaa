#include "multirel/power.hpp"

namespace multirel {

Rel member_rel(std::size_t y) {
  const std::size_t n = powerset_size(y);
  Rel out(y, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b : mask_elements(a)) out.set(b, a);
  }
  return out;
}

MRel power_transpose(const Rel& r) {
  if (r.dst() > kMaskCap) {
    throw Error(ErrorKind::MaskTooWide, "power transpose target of size " + std::to_string(r.dst()));
  }
  std::vector<MRel::Row> rows(r.src());
  for (std::size_t a = 0; a < r.src(); ++a) rows[a].push_back(r.dst() == 0 ? Mask{0} : r.row(a)[0]);
  return MRel(r.src(), r.dst(), std::move(rows));
}

Rel alpha(const MRel& m) {
  Rel out(m.src(), m.dst());
  for (std::size_t a = 0; a < m.src(); ++a) {
    Mask u = 0;
    for (Mask x : m.row(a)) u |= x;
    for (std::size_t b : mask_elements(u)) out.set(a, b);
  }
  return out;
}

Rel image_functor(const Rel& r) {
  const std::size_t rows = powerset_size(r.src());
  powerset_size(r.dst());
  if (r.dst() > kMaskCap) throw Error(ErrorKind::MaskTooWide, "image functor target too wide");
  std::vector<Mask> image(r.src());
  for (std::size_t a = 0; a < r.src(); ++a) image[a] = r.dst() == 0 ? 0 : r.row(a)[0];
  Rel out(rows, std::size_t{1} << r.dst());
  for (std::size_t set = 0; set < rows; ++set) {
    Mask u = 0;
    for (std::size_t a : mask_elements(set)) u |= image[a];
    out.set(set, u);
  }
  return out;
}

MRel eta(std::size_t x) { return mrel_const(MRelConst::Eta, x, x); }

Rel mu(std::size_t x) {
  const std::size_t px = powerset_size(x);
  const std::size_t ppx = powerset_size(px);
  Rel out(ppx, px);
  for (std::size_t family = 0; family < ppx; ++family) {
    Mask u = 0;
    for (std::size_t member : mask_elements(family)) u |= member;
    out.set(family, u);
  }
  return out;
}

Rel omega(std::size_t x) {
  const std::size_t n = powerset_size(x);
  Rel out(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (mask_subset(a, b)) out.set(a, b);
    }
  }
  return out;
}

Rel complementation(std::size_t x) {
  const std::size_t n = powerset_size(x);
  const Mask full = full_mask(x);
  Rel out(n, n);
  for (std::size_t a = 0; a < n; ++a) out.set(a, full & ~a);
  return out;
}

std::variant<Rel, MRel> monad_const(MonadConst kind, std::size_t x) {
  switch (kind) {
    case MonadConst::Eta: return eta(x);
    case MonadConst::Mu: return mu(x);
    case MonadConst::Omega: return omega(x);
    case MonadConst::CComp: return complementation(x);
  }
  return eta(x);
}

}  // namespace multirel
