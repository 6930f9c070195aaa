#include "multirel/laws.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <limits>
#include <thread>

namespace multirel {

std::string to_string(LawKind k) {
  switch (k) {
    case LawKind::Theorem: return "theorem";
    case LawKind::NonTheorem: return "non-theorem";
    case LawKind::Regression: return "regression";
  }
  return "theorem";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Skipped: return "skipped";
  }
  return "skipped";
}

Instance instance_minus(const Instance& a, const Instance& b) {
  if (a.index() != b.index()) throw Error(ErrorKind::ShapeMismatch, "cannot subtract values of different kinds");
  if (const Rel* r = std::get_if<Rel>(&a)) return minus(*r, std::get<Rel>(b));
  return minus(std::get<MRel>(a), std::get<MRel>(b));
}

bool instance_empty(const Instance& v) {
  return std::visit([](const auto& x) { return x.empty(); }, v);
}

bool instance_contains(const Instance& super, const Instance& sub) {
  if (super.index() != sub.index()) return false;
  if (const Rel* r = std::get_if<Rel>(&sub)) {
    const Rel& s = std::get<Rel>(super);
    return r->src() == s.src() && r->dst() == s.dst() && is_subset(*r, s);
  }
  const MRel& m = std::get<MRel>(sub);
  const MRel& s = std::get<MRel>(super);
  return m.src() == s.src() && m.dst() == s.dst() && is_subset(m, s);
}

namespace {

constexpr std::uint64_t kBlock = 4096;
constexpr std::uint64_t kSat = std::numeric_limits<std::uint64_t>::max();

enum class Outcome { Skip, Pass, Fail };

bool propagates(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::SyntaxError:
    case ErrorKind::UnknownLaw:
    case ErrorKind::UnboundVariable:
    case ErrorKind::TypeError: return true;
    default: return false;
  }
}

std::string term_text(const Law& law) {
  if (law.guard.empty()) return law.claim;
  return "(" + law.guard + ") ==> (" + law.claim + ")";
}

FlagSet condition_for(const Law& law, const std::string& var) {
  FlagSet f;
  for (const auto& [name, flags] : law.conditions) {
    if (name == var) f |= parse_flags(flags);
  }
  return f;
}

/// A law fixed to concrete carrier sizes.
struct Compiled {
  const Law* law = nullptr;
  Program prog;
  int claim = 0;
  int guard = -1;
  std::vector<FlagSet> conds;

  Outcome run(std::span<const Instance> slots) const {
    if (guard >= 0 && !std::get<bool>(prog.eval_node(guard, slots))) return Outcome::Skip;
    return std::get<bool>(prog.eval_node(claim, slots)) ? Outcome::Pass : Outcome::Fail;
  }

  bool conditions_hold(std::span<const Instance> slots) const {
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if (conds[i].none()) continue;
      const bool ok = std::visit([&](const auto& v) { return satisfies(v, conds[i]); }, slots[i]);
      if (!ok) return false;
    }
    return true;
  }

  /// Conditions hold, the guard holds and the claim fails; errors count as "no".
  bool still_fails(std::span<const Instance> slots) const {
    if (!conditions_hold(slots)) return false;
    try {
      return run(slots) == Outcome::Fail;
    } catch (const Error&) {
      return false;
    }
  }
};

Compiled compile(const Law& law, const TypedTerm& typed, const std::vector<std::size_t>& sizes) {
  Compiled c;
  c.law = &law;
  c.prog = typed.instantiate(sizes);
  if (!law.guard.empty()) {
    c.guard = c.prog.node(0).kids[0];
    c.claim = c.prog.node(0).kids[1];
  }
  for (const auto& name : c.prog.variables()) c.conds.push_back(condition_for(law, name));
  return c;
}

std::vector<std::size_t> effective_sizes(const Law& law, const TypedTerm& typed, const CheckOptions& opts) {
  const std::vector<std::size_t>& req = opts.sizes ? *opts.sizes : law.default_sizes;
  std::vector<std::size_t> out;
  if (req.empty()) return out;
  for (std::size_t k = 0; k < typed.free_carriers().size(); ++k) {
    std::size_t s = req[std::min(k, req.size() - 1)];
    if (opts.clamp && !law.max_sizes.empty()) s = std::min(s, law.max_sizes[std::min(k, law.max_sizes.size() - 1)]);
    out.push_back(s);
  }
  return out;
}

InstanceSpace slot_space(const RelType& t, FlagSet cond) {
  if (stored_as_mrel(t)) return InstanceSpace(GenKind::MRel, ty_count(*t.src), ty_count(*t.dst->inner), cond);
  return InstanceSpace(GenKind::Rel, ty_count(*t.src), ty_count(*t.dst), cond);
}

// ---------------------------------------------------------------- shrinking

std::optional<std::size_t> map_index(const Ty& from, const Ty& to, std::size_t idx) {
  if (!from.is_pow()) {
    if (idx < to.size) return idx;
    return std::nullopt;
  }
  std::size_t out = 0;
  for (std::size_t j = 0; (idx >> j) != 0; ++j) {
    if (((idx >> j) & 1U) == 0) continue;
    auto m = map_index(*from.inner, *to.inner, j);
    if (!m || *m >= 64) return std::nullopt;
    out |= std::size_t{1} << *m;
  }
  return out;
}

std::optional<Instance> map_value(const Instance& v, const RelType& from, const RelType& to) {
  if (const MRel* m = std::get_if<MRel>(&v)) {
    const std::size_t src = ty_count(*to.src);
    const std::size_t base = ty_count(*to.dst->inner);
    std::vector<MRel::Row> rows(src);
    for (auto [a, mask] : m->pairs()) {
      auto na = map_index(*from.src, *to.src, a);
      auto nm = map_index(*from.dst, *to.dst, static_cast<std::size_t>(mask));
      if (!na || !nm) return std::nullopt;
      rows[*na].push_back(*nm);
    }
    return normalise(MRel(src, base, std::move(rows)), to);
  }
  const Rel& r = std::get<Rel>(v);
  Rel out(ty_count(*to.src), ty_count(*to.dst));
  for (auto [a, b] : r.pairs()) {
    auto na = map_index(*from.src, *to.src, a);
    auto nb = map_index(*from.dst, *to.dst, b);
    if (!na || !nb) return std::nullopt;
    out.set(*na, *nb);
  }
  return normalise(std::move(out), to);
}

struct Shrunk {
  Compiled compiled;
  std::vector<Instance> values;
  std::vector<std::size_t> sizes;
};

bool drop_pairs(const Compiled& c, std::vector<Instance>& values) {
  bool changed = false;
  for (std::size_t s = 0; s < values.size(); ++s) {
    std::size_t i = 0;
    while (true) {
      Instance trial = values[s];
      bool have = false;
      if (MRel* m = std::get_if<MRel>(&trial)) {
        auto pairs = m->pairs();
        if (i < pairs.size()) {
          m->erase(pairs[i].first, pairs[i].second);
          have = true;
        }
      } else {
        Rel& r = std::get<Rel>(trial);
        auto pairs = r.pairs();
        if (i < pairs.size()) {
          r.set(pairs[i].first, pairs[i].second, false);
          have = true;
        }
      }
      if (!have) break;
      std::swap(values[s], trial);
      if (c.still_fails(values)) {
        changed = true;  // same index now names the next pair
      } else {
        std::swap(values[s], trial);
        ++i;
      }
    }
  }
  return changed;
}

bool clear_bits(const Compiled& c, std::vector<Instance>& values) {
  bool changed = false;
  for (std::size_t s = 0; s < values.size(); ++s) {
    if (!std::holds_alternative<MRel>(values[s])) continue;
    bool again = true;
    while (again) {
      again = false;
      const auto pairs = std::get<MRel>(values[s]).pairs();
      for (auto [a, mask] : pairs) {
        for (Mask rest = mask; rest != 0 && !again; rest &= rest - 1) {
          const Mask smaller = mask & ~(rest & (~rest + 1));
          Instance trial = values[s];
          MRel& m = std::get<MRel>(trial);
          m.erase(a, mask);
          m.insert(a, smaller);
          std::swap(values[s], trial);
          if (c.still_fails(values)) {
            changed = again = true;
          } else {
            std::swap(values[s], trial);
          }
        }
        if (again) break;
      }
    }
  }
  return changed;
}

bool drop_elements(Shrunk& st, const TypedTerm& typed) {
  bool changed = false;
  for (std::size_t k = 0; k < st.sizes.size(); ++k) {
    while (st.sizes[k] > 1) {
      std::vector<std::size_t> smaller = st.sizes;
      --smaller[k];
      std::optional<Compiled> next;
      try {
        next = compile(*st.compiled.law, typed, smaller);
      } catch (const Error&) {
        break;
      }
      std::vector<Instance> mapped;
      bool ok = true;
      for (std::size_t s = 0; s < st.values.size() && ok; ++s) {
        auto v = map_value(st.values[s], st.compiled.prog.variable_type(s), next->prog.variable_type(s));
        if (v) {
          mapped.push_back(std::move(*v));
        } else {
          ok = false;
        }
      }
      if (!ok || !next->still_fails(mapped)) break;
      st.compiled = std::move(*next);
      st.values = std::move(mapped);
      st.sizes = std::move(smaller);
      changed = true;
    }
  }
  return changed;
}

Counterexample describe(const Compiled& c, const std::vector<Instance>& values, const std::vector<std::size_t>& sizes) {
  Counterexample cx;
  for (std::size_t s = 0; s < values.size(); ++s) cx.values.emplace_back(c.prog.variables()[s], values[s]);
  cx.sizes = sizes;
  try {
    if (auto sides = c.prog.sides_of(c.claim, values)) {
      cx.lhs_minus_rhs = instance_minus(sides->first, sides->second);
      cx.rhs_minus_lhs = instance_minus(sides->second, sides->first);
    }
  } catch (const Error&) {
  }
  return cx;
}

// ---------------------------------------------------------------- search

struct BlockResult {
  std::uint64_t checked = 0;
  std::uint64_t skipped = 0;
  std::optional<std::uint64_t> first_fail;
  std::optional<Error> error;
};

using TupleSource = std::function<bool(std::uint64_t, std::vector<Instance>&)>;

BlockResult run_block(const Compiled& c, const TupleSource& source, std::uint64_t begin, std::uint64_t end) {
  BlockResult out;
  std::vector<Instance> slots;
  try {
    for (std::uint64_t i = begin; i < end; ++i) {
      if (!source(i, slots)) {
        ++out.skipped;
        continue;
      }
      switch (c.run(slots)) {
        case Outcome::Skip: ++out.skipped; break;
        case Outcome::Pass: ++out.checked; break;
        case Outcome::Fail:
          ++out.checked;
          if (!out.first_fail) out.first_fail = i;
          break;
      }
    }
  } catch (const Error& e) {
    out.error = e;
  }
  return out;
}

struct SearchResult {
  std::uint64_t checked = 0;
  std::uint64_t skipped = 0;
  std::optional<std::uint64_t> first_fail;
};

/// Blocks are evaluated in rounds of `jobs`; the search stops after the round
/// holding the earliest failing block and counts only blocks up to it, so the
/// numbers do not depend on the number of workers.
SearchResult search(const Compiled& c, const TupleSource& source, std::uint64_t total, unsigned jobs) {
  SearchResult out;
  const std::uint64_t blocks = total == 0 ? 0 : (total - 1) / kBlock + 1;
  jobs = std::max(1U, jobs);
  for (std::uint64_t first = 0; first < blocks; first += jobs) {
    const std::uint64_t n = std::min<std::uint64_t>(jobs, blocks - first);
    std::vector<BlockResult> res(n);
    auto work = [&](std::uint64_t k) {
      const std::uint64_t b = first + k;
      res[k] = run_block(c, source, b * kBlock, std::min(total, (b + 1) * kBlock));
    };
    if (n == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (std::uint64_t k = 0; k < n; ++k) pool.emplace_back(work, k);
      for (auto& t : pool) t.join();
    }
    for (std::uint64_t k = 0; k < n; ++k) {
      if (res[k].error) throw *res[k].error;
      out.checked += res[k].checked;
      out.skipped += res[k].skipped;
      if (res[k].first_fail) {
        out.first_fail = res[k].first_fail;
        return out;
      }
    }
  }
  return out;
}

void finish(LawReport& r, const Law& law) {
  r.expected_holds = law.expect_holds;
  if (r.verdict == Verdict::Skipped) {
    r.as_expected = false;
  } else {
    r.as_expected = (r.verdict == Verdict::Pass) == law.expect_holds;
  }
}

LawReport check_pinned(const Law& law, LawReport r) {
  r.mode = "pinned";
  const Env env = env_from_json(Json::parse(law.pinned));
  TypeContext ctx;
  ctx.carriers = env.carriers;
  for (const auto& [name, b] : env.values) ctx.variables[name] = b.type;
  const TypedTerm typed = TypedTerm::infer(parse(term_text(law)), ctx);
  r.sizes = effective_sizes(law, typed, CheckOptions{});
  const Compiled c = compile(law, typed, r.sizes);
  std::vector<Instance> slots;
  for (const auto& name : c.prog.variables()) slots.push_back(env.values.at(name).value);
  const Outcome o = c.run(slots);
  if (o == Outcome::Skip) {
    r.verdict = Verdict::Skipped;
    r.skipped_by_condition = 1;
    r.reason = "guard does not hold on the pinned values";
    finish(r, law);
    return r;
  }
  r.checked = 1;
  r.verdict = o == Outcome::Pass ? Verdict::Pass : Verdict::Fail;
  if (o == Outcome::Fail) r.counterexamples.push_back(describe(c, slots, r.sizes));
  finish(r, law);
  if (r.verdict == Verdict::Fail && !law.witness.empty()) {
    const Json w = Json::parse(law.witness);
    const Counterexample& cx = r.counterexamples.front();
    bool ok = true;
    for (const auto& [key, val] : w.items()) {
      const std::optional<Instance>& got = key == "lhs_minus_rhs" ? cx.lhs_minus_rhs : cx.rhs_minus_lhs;
      if (!got || !instance_contains(*got, instance_from_json(val))) ok = false;
    }
    if (!ok) {
      r.as_expected = false;
      r.reason = "stored witness not reproduced";
    }
  }
  return r;
}

LawReport check_generated(const Law& law, const CheckOptions& opts, LawReport r) {
  TypeContext ctx;
  ctx.allow_free_variables = true;
  const TypedTerm typed = TypedTerm::infer(parse(term_text(law)), ctx);
  r.sizes = effective_sizes(law, typed, opts);
  const Compiled c = compile(law, typed, r.sizes);
  const std::size_t n = c.prog.variables().size();
  std::vector<InstanceSpace> spaces;
  for (std::size_t s = 0; s < n; ++s) spaces.push_back(slot_space(c.prog.variable_type(s), c.conds[s]));

  std::uint64_t total = 1;
  for (const auto& sp : spaces) {
    const std::uint64_t k = sp.raw_count();
    total = (k != 0 && total > kSat / k) ? kSat : total * k;
  }
  const bool random = opts.random_count.has_value() || total > law.exhaustive_limit;
  TupleSource source;
  std::uint64_t count;
  if (random) {
    r.mode = "random";
    count = opts.random_count.value_or(law.samples);
    const std::uint64_t seed = opts.seed;
    const double p = opts.density;
    source = [&spaces, seed, p](std::uint64_t i, std::vector<Instance>& out) {
      out.clear();
      for (std::size_t s = 0; s < spaces.size(); ++s) {
        auto v = spaces[s].sample(seed, i, s, p);
        if (!v) return false;
        out.push_back(std::move(*v));
      }
      return true;
    };
  } else {
    r.mode = "exhaustive";
    count = total;
    source = [&spaces](std::uint64_t i, std::vector<Instance>& out) {
      out.clear();
      for (const auto& sp : spaces) {
        auto v = sp.at(i % sp.raw_count());
        i /= sp.raw_count();
        if (!v) return false;
        out.push_back(std::move(*v));
      }
      return true;
    };
  }

  const SearchResult found = search(c, source, count, opts.jobs);
  r.checked = found.checked;
  r.skipped_by_condition = found.skipped;
  if (!found.first_fail) {
    r.verdict = r.checked == 0 ? Verdict::Skipped : Verdict::Pass;
    if (r.checked == 0) r.reason = "no tuple satisfied the side conditions";
    finish(r, law);
    return r;
  }
  r.verdict = Verdict::Fail;
  std::vector<Instance> values;
  source(*found.first_fail, values);
  Shrunk st{c, values, r.sizes};
  if (opts.shrink) {
    bool changed = true;
    while (changed) {
      changed = drop_pairs(st.compiled, st.values);
      changed = clear_bits(st.compiled, st.values) || changed;
      changed = drop_elements(st, typed) || changed;
    }
  }
  r.counterexamples.push_back(describe(st.compiled, st.values, st.sizes));
  finish(r, law);
  return r;
}

Json sizes_json(const std::vector<std::size_t>& s) {
  Json out = Json::array();
  for (std::size_t v : s) out.push_back(v);
  return out;
}

}  // namespace

LawReport check(const Law& law, const CheckOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  LawReport r;
  r.law = law.id;
  r.kind = law.kind;
  r.seed = opts.seed;
  r.expected_holds = law.expect_holds;
  try {
    r = law.pinned.empty() ? check_generated(law, opts, r) : check_pinned(law, r);
  } catch (const Error& e) {
    if (propagates(e)) throw;
    r.verdict = Verdict::Skipped;
    r.reason = e.what();
    r.counterexamples.clear();
    finish(r, law);
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

Json report_json(const LawReport& r, bool timing) {
  Json j;
  j["law"] = r.law;
  j["kind"] = to_string(r.kind);
  j["mode"] = r.mode;
  j["checked"] = r.checked;
  j["skipped_by_condition"] = r.skipped_by_condition;
  j["verdict"] = to_string(r.verdict);
  j["expected"] = r.expected_holds ? "pass" : "fail";
  j["as_expected"] = r.as_expected;
  j["seed"] = r.seed;
  j["sizes"] = sizes_json(r.sizes);
  Json cxs = Json::array();
  for (const auto& cx : r.counterexamples) {
    Json c;
    Json values = Json::object();
    for (const auto& [name, v] : cx.values) values[name] = to_json(v);
    c["values"] = std::move(values);
    c["sizes"] = sizes_json(cx.sizes);
    if (cx.lhs_minus_rhs) c["lhs_minus_rhs"] = to_json(*cx.lhs_minus_rhs);
    if (cx.rhs_minus_lhs) c["rhs_minus_lhs"] = to_json(*cx.rhs_minus_lhs);
    cxs.push_back(std::move(c));
  }
  j["counterexamples"] = std::move(cxs);
  if (!r.reason.empty()) j["reason"] = r.reason;
  if (timing) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

const Law& find_law(std::string_view id) {
  for (const Law& l : registry()) {
    if (l.id == id) return l;
  }
  throw Error(ErrorKind::UnknownLaw, "no law named '" + std::string(id) + "'");
}

}  // namespace multirel
