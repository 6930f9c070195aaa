#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "multirel/dsl.hpp"
#include "multirel/mrel.hpp"
#include "multirel/rel.hpp"

namespace mt {

using multirel::Mask;
using multirel::MRel;
using multirel::Rel;

inline Rel rel(std::size_t src, std::size_t dst, std::vector<std::pair<std::size_t, std::size_t>> pairs) {
  return Rel(src, dst, pairs);
}

// rows of element lists: {{{0,1}}, {}} is {(0,{0,1})}
inline MRel mrel(std::size_t src, std::size_t dst, std::vector<std::vector<std::vector<std::size_t>>> rows) {
  std::vector<MRel::Row> out;
  for (const auto& r : rows) {
    MRel::Row row;
    for (const auto& set : r) row.push_back(multirel::mask_of(set));
    out.push_back(row);
  }
  return MRel(src, dst, out);
}

inline multirel::Env env_of(std::initializer_list<std::pair<const char*, multirel::Instance>> values) {
  multirel::Env env;
  for (const auto& [name, v] : values) {
    multirel::RelType t;
    if (const auto* m = std::get_if<MRel>(&v)) {
      t = {multirel::base_ty(m->src()), multirel::pow_ty(multirel::base_ty(m->dst()))};
    } else {
      const Rel& r = std::get<Rel>(v);
      t = {multirel::base_ty(r.src()), multirel::base_ty(r.dst())};
    }
    env.values[name] = {t, v};
  }
  return env;
}

inline bool holds(const char* expr, const multirel::Env& env, std::vector<std::size_t> sizes = {}) {
  return std::get<bool>(multirel::evaluate(expr, env, sizes));
}

inline multirel::Instance value(const char* expr, const multirel::Env& env, std::vector<std::size_t> sizes = {}) {
  return std::get<multirel::Instance>(multirel::evaluate(expr, env, sizes));
}

}  // namespace mt
