#include "multirel/peleg.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "multirel/power.hpp"

namespace multirel {

namespace {

std::string describe_pair(std::size_t a, Mask b) {
  std::string s = "(" + std::to_string(a) + ",{";
  bool first = true;
  for (std::size_t e : mask_elements(b)) {
    if (!first) s += ",";
    s += std::to_string(e);
    first = false;
  }
  return s + "})";
}

/// Every ⋃ g over choice functions g with g(i) ∈ rows[i]. Empty when some row
/// is empty (no choice exists). Charges the frontier work against the budget.
std::vector<Mask> choice_unions(const std::vector<const MRel::Row*>& rows, std::uint64_t& work, std::uint64_t cap,
                                const std::string& context) {
  std::vector<Mask> current{0};
  std::vector<Mask> next;
  for (const MRel::Row* row : rows) {
    if (row->empty()) return {};
    work += static_cast<std::uint64_t>(current.size()) * row->size();
    if (work > cap) {
      throw Error(ErrorKind::EnumerationTooLarge,
                  "choice enumeration for " + context + " exceeds " + std::to_string(cap) + " steps");
    }
    next.clear();
    next.reserve(current.size() * row->size());
    for (Mask u : current) {
      for (Mask m : *row) next.push_back(u | m);
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    current.swap(next);
  }
  return current;
}

}  // namespace

MRel DChoice::materialise() const {
  MRel out(base->src(), base->dst());
  for (std::size_t i = 0; i < domain.size(); ++i) out.insert(domain[i], base->row(domain[i])[selection[i]]);
  return out;
}

void for_each_d_subrelation(const MRel& r, const std::function<void(const DChoice&)>& visit, std::uint64_t cap) {
  DChoice choice;
  choice.base = &r;
  std::uint64_t product = 1;
  for (std::size_t a = 0; a < r.src(); ++a) {
    if (r.row(a).empty()) continue;
    choice.domain.push_back(a);
    product *= r.row(a).size();
    if (product > cap) {
      throw Error(ErrorKind::EnumerationTooLarge,
                  "more than " + std::to_string(cap) + " d-subrelations (row product)");
    }
  }
  choice.selection.assign(choice.domain.size(), 0);
  while (true) {
    visit(choice);
    std::size_t i = choice.domain.size();
    while (i > 0) {
      --i;
      if (++choice.selection[i] < r.row(choice.domain[i]).size()) break;
      choice.selection[i] = 0;
      if (i == 0) return;
    }
    if (choice.domain.empty()) return;
  }
}

std::vector<MRel> d_subrelations(const MRel& r, std::uint64_t cap) {
  std::vector<MRel> out;
  for_each_d_subrelation(r, [&](const DChoice& c) { out.push_back(c.materialise()); }, cap);
  return out;
}

MRel d_union(const MRel& r, std::uint64_t cap) {
  MRel out(r.src(), r.dst());
  for_each_d_subrelation(r, [&](const DChoice& c) { out = unite(out, c.materialise()); }, cap);
  return out;
}

Rel kleisli_lift(const MRel& r) {
  const std::size_t rows = powerset_size(r.src());
  Rel out(rows, powerset_size(r.dst()));
  std::vector<Mask> flat(r.src(), 0);
  for (std::size_t a = 0; a < r.src(); ++a) {
    for (Mask m : r.row(a)) flat[a] |= m;
  }
  for (std::size_t set = 0; set < rows; ++set) {
    Mask u = 0;
    for (std::size_t a : mask_elements(set)) u |= flat[a];
    out.set(set, u);
  }
  return out;
}

Rel peleg_lift(const MRel& r, std::uint64_t cap) {
  const std::size_t rows = powerset_size(r.src());
  Rel out(rows, powerset_size(r.dst()));
  // unions[A] extends unions[A minus its lowest element] by that element's row.
  std::vector<std::vector<Mask>> unions(rows);
  unions[0] = {0};
  std::uint64_t work = 0;
  for (std::size_t set = 1; set < rows; ++set) {
    const std::size_t low = static_cast<std::size_t>(std::countr_zero(set));
    const auto& rest = unions[set & (set - 1)];
    if (rest.empty()) continue;
    unions[set] = choice_unions({&r.row(low)}, work, cap, "Peleg lifting");
    if (unions[set].empty()) continue;
    std::vector<Mask> merged;
    merged.reserve(rest.size() * unions[set].size());
    for (Mask u : rest) {
      for (Mask m : unions[set]) merged.push_back(u | m);
    }
    work += merged.size();
    if (work > cap) throw Error(ErrorKind::EnumerationTooLarge, "Peleg lifting exceeds enumeration cap");
    std::sort(merged.begin(), merged.end());
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    unions[set] = std::move(merged);
  }
  for (std::size_t set = 0; set < rows; ++set) {
    for (Mask u : unions[set]) out.set(set, u);
  }
  return out;
}

MRel peleg_compose(const MRel& r, const MRel& s, std::uint64_t cap) {
  if (r.dst() != s.src()) {
    throw Error(ErrorKind::ShapeMismatch, "Peleg composition of " + std::to_string(r.src()) + "->P" +
                                              std::to_string(r.dst()) + " with " + std::to_string(s.src()) + "->P" +
                                              std::to_string(s.dst()));
  }
  std::vector<MRel::Row> rows(r.src());
  std::unordered_map<Mask, std::vector<Mask>> memo;
  std::vector<const MRel::Row*> choice_rows;
  for (std::size_t a = 0; a < r.src(); ++a) {
    for (Mask b : r.row(a)) {
      auto it = memo.find(b);
      if (it == memo.end()) {
        std::uint64_t work = 0;
        choice_rows.clear();
        for (std::size_t e : mask_elements(b)) choice_rows.push_back(&s.row(e));
        it = memo.emplace(b, choice_unions(choice_rows, work, cap, "pair " + describe_pair(a, b))).first;
      }
      rows[a].insert(rows[a].end(), it->second.begin(), it->second.end());
    }
  }
  return MRel(r.src(), s.dst(), std::move(rows));
}

MRel peleg_compose_oracle(const MRel& r, const MRel& s, std::uint64_t cap) {
  if (r.dst() != s.src()) throw Error(ErrorKind::ShapeMismatch, "Peleg composition oracle: incompatible shapes");
  const std::size_t py = powerset_size(s.src());
  // dom(S)_*: the identity on subsets of dom(S).
  Mask dom = 0;
  for (std::size_t b = 0; b < s.src(); ++b) {
    if (!s.row(b).empty()) dom |= singleton(b);
  }
  Rel dom_lift(py, py);
  for (std::size_t set = 0; set < py; ++set) {
    if (mask_subset(set, dom)) dom_lift.set(set, set);
  }
  Rel lifts(py, powerset_size(s.dst()));
  for_each_d_subrelation(
      s, [&](const DChoice& t) { lifts = unite(lifts, image_functor(alpha(t.materialise()))); }, cap);
  return from_rel(compose(to_rel(r), compose(dom_lift, lifts)), s.dst());
}

MRel kleisli_compose(const MRel& r, const MRel& s) {
  if (r.dst() != s.src()) throw Error(ErrorKind::ShapeMismatch, "Kleisli composition: incompatible shapes");
  std::vector<Mask> flat(s.src(), 0);
  for (std::size_t b = 0; b < s.src(); ++b) {
    for (Mask m : s.row(b)) flat[b] |= m;
  }
  std::vector<MRel::Row> rows(r.src());
  for (std::size_t a = 0; a < r.src(); ++a) {
    for (Mask b : r.row(a)) {
      Mask u = 0;
      for (std::size_t e : mask_elements(b)) u |= flat[e];
      rows[a].push_back(u);
    }
  }
  return MRel(r.src(), s.dst(), std::move(rows));
}

MRel odot(const MRel& r, const MRel& s, std::uint64_t cap) {
  return inner_complement(peleg_compose(r, inner_complement(s), cap));
}

}  // namespace multirel
