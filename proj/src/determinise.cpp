#include "multirel/determinise.hpp"

namespace multirel {

MRel fusion(const MRel& r) {
  std::vector<MRel::Row> rows(r.src());
  for (std::size_t a = 0; a < r.src(); ++a) {
    Mask u = 0;
    for (Mask m : r.row(a)) u |= m;
    rows[a].push_back(u);
  }
  return MRel(r.src(), r.dst(), std::move(rows));
}

MRel fission(const MRel& r) {
  std::vector<MRel::Row> rows(r.src());
  for (std::size_t a = 0; a < r.src(); ++a) {
    Mask u = 0;
    for (Mask m : r.row(a)) u |= m;
    for (std::size_t b : mask_elements(u)) rows[a].push_back(singleton(b));
  }
  return MRel(r.src(), r.dst(), std::move(rows));
}

MRel cofusion(const MRel& r) { return inner_complement(fusion(inner_complement(r))); }

MRel cofission(const MRel& r) { return inner_complement(fission(inner_complement(r))); }

MRel cofusion_by_meet(const MRel& r) {
  std::vector<MRel::Row> rows(r.src());
  const Mask full = full_mask(r.dst());
  for (std::size_t a = 0; a < r.src(); ++a) {
    Mask meet = full;
    for (Mask m : r.row(a)) meet &= m;
    rows[a].push_back(meet);
  }
  return MRel(r.src(), r.dst(), std::move(rows));
}

MRel determinise(DetMode mode, const MRel& r) {
  switch (mode) {
    case DetMode::Fusion: return fusion(r);
    case DetMode::Fission: return fission(r);
    case DetMode::Cofusion: return cofusion(r);
    case DetMode::Cofission: return cofission(r);
  }
  return fusion(r);
}

MRel closed_repr(ClosureMode mode, const MRel& r) {
  if (mode == ClosureMode::Convex) throw Error(ErrorKind::InvalidValue, "closed representation is up or down only");
  return closure(mode, fusion(r));
}

namespace {

bool leq(int order, const MRel& r, const MRel& s) {
  switch (order) {
    case 0: return is_subset(r, s);
    case 1: return smyth(r, s);
    case 2: return hoare(r, s);
    default: return smyth(r, s) && hoare(r, s);
  }
}

void fill(OrderFlags* out, const MRel& r, const MRel& fr) {
  for (int order = 0; order < 4; ++order) {
    out[order].fix = r == fr;
    out[order].pre = leq(order, fr, r);
    out[order].post = leq(order, r, fr);
  }
}

}  // namespace

FixpointClass fixpoint_class(const MRel& r) {
  FixpointClass out;
  fill(out.fusion, r, fusion(r));
  fill(out.fission, r, fission(r));
  return out;
}

}  // namespace multirel
