// One line per acceptance criterion; exit status is non-zero if any fails.
#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "multirel/determinise.hpp"
#include "multirel/generate.hpp"
#include "multirel/laws.hpp"
#include "multirel/peleg.hpp"
#include "multirel/power.hpp"

using namespace multirel;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) {
      detail.clear();
      ok = false;
    } else if (detail.find(why) != std::string::npos) {
      return;
    } else {
      detail += "; ";
    }
    detail += why;
  }
  void note(const std::string& s) {
    if (ok) detail += (detail.empty() ? "" : ", ") + s;
  }
};

double ms_since(Clock::time_point t) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t).count();
}

std::vector<MRel> mrels(std::size_t x, std::size_t y, FlagSet filter = {}) {
  GenSpec spec{x, y};
  spec.filter = filter;
  std::vector<MRel> out;
  enumerate(GenKind::MRel, spec, [&](const Instance& v) { out.push_back(std::get<MRel>(v)); });
  return out;
}

// runs a registry law and requires the declared outcome; `exhaustive` also
// requires that no sampling happened
void law(Outcome& o, const std::string& id, std::vector<std::size_t> sizes, bool exhaustive,
         std::uint64_t* checked = nullptr) {
  CheckOptions opts;
  if (!sizes.empty()) opts.sizes = sizes;
  const LawReport r = check(find_law(id), opts);
  if (checked) *checked = r.checked;
  if (!r.as_expected) {
    o.fail(id + " " + to_string(r.verdict) + (r.reason.empty() ? "" : " (" + r.reason + ")"));
  } else if (exhaustive && r.mode != "exhaustive" && r.mode != "pinned") {
    o.fail(id + " ran in " + r.mode + " mode");
  }
}

void report(int n, const char* title, const Outcome& o, double ms, double budget_ms, bool& all_ok) {
  bool ok = o.ok;
  std::string detail = o.detail;
  if (ms > budget_ms) {
    ok = false;
    detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
  }
  all_ok = all_ok && ok;
  std::printf("[%s] criterion %d: %s (%.0f ms)%s%s\n", ok ? "PASS" : "FAIL", n, title, ms, detail.empty() ? "" : " - ",
              detail.c_str());
  std::fflush(stdout);
}

Outcome round_trips() {
  Outcome o;
  std::size_t rels = 0, rels_small = 0;
  for (std::size_t x = 1; x <= 3; ++x) {
    for (std::size_t y = 1; y <= 3; ++y) {
      enumerate(GenKind::Rel, GenSpec{x, y}, [&](const Instance& v) {
        const Rel& r = std::get<Rel>(v);
        ++rels;
        if (x * y <= 6) ++rels_small;
        if (alpha(power_transpose(r)) != r) o.fail("alpha(L(R)) != R");
        if (alpha(from_rel(compose(r, to_rel(eta(y))), y)) != r) o.fail("alpha(R;1) != R");
      });
    }
  }
  const auto dets = mrels(2, 2, Flag::OuterDeterministic);
  if (dets.size() != 16) o.fail("expected 16 outer deterministic multirelations");
  for (const MRel& f : dets) {
    if (power_transpose(alpha(f)) != f) o.fail("L(alpha(f)) != f");
  }
  std::size_t idets = 0;
  for (std::size_t x = 1; x <= 2; ++x) {
    for (std::size_t y = 1; y <= 3; ++y) {
      for (const MRel& m : mrels(x, y, Flag::InnerDeterministic)) {
        ++idets;
        if (from_rel(compose(alpha(m), to_rel(eta(y))), y) != m) o.fail("alpha(R);1 != R");
      }
    }
  }
  o.note(std::to_string(rels) + " relations over every shape up to 3x3 (" + std::to_string(rels_small) +
         " with |X||Y|<=6), 16 functions, " + std::to_string(idets) + " inner deterministic");
  return o;
}

Outcome peleg_oracle() {
  Outcome o;
  const auto all = mrels(2, 2);
  std::size_t pairs = 0;
  for (const MRel& r : all) {
    for (const MRel& s : all) {
      ++pairs;
      if (peleg_compose(r, s) != peleg_compose_oracle(r, s)) o.fail("mismatch at size 2");
    }
  }
  InstanceSpace space(GenKind::MRel, 3, 3);
  for (std::uint64_t i = 0; i < 1000; ++i) {
    const MRel r = std::get<MRel>(*space.sample(2024, i, 0, 0.5));
    const MRel s = std::get<MRel>(*space.sample(2024, i, 1, 0.5));
    if (peleg_compose(r, s) != peleg_compose_oracle(r, s)) o.fail("mismatch at size 3, sample " + std::to_string(i));
  }
  o.note(std::to_string(pairs) + " + 1000 pairs");
  return o;
}

Outcome pinned_witnesses() {
  Outcome o;
  for (const char* id :
       {"REG-alpha-strict", "REG-peleg-square-empty", "REG-nonassoc-triple", "NEG-peleg-assoc-general",
        "REG-galois-subset-1", "REG-galois-subset-2", "REG-galois-subset-3", "REG-galois-subset-4", "REG-nu-fusion",
        "REG-fission-not-functorial", "REG-fusion-not-functorial", "REG-quantaloid-empty-iuniv",
        "REG-quantaloid-empty-icup"}) {
    law(o, id, {}, true);
  }
  // the triple with S(b) = {a,c}: both multirelations have one set per
  // element, and deterministic multirelations compose associatively
  const MRel r(3, 3, {{3}, {1}, {4}});
  const MRel s(3, 3, {{3}, {5}, {4}});
  const MRel left = peleg_compose(r, peleg_compose(r, s));
  const MRel right = peleg_compose(peleg_compose(r, r), s);
  if (!(left.contains(0, 7) && !right.contains(0, 7))) {
    o.fail("triple with S(b)={a,c}: (a,{a,b,c}) lies in both R*(R*S) and (R*R)*S, witness not reproducible "
           "(REG-nonassoc-triple uses S with a second set at a)");
  }
  return o;
}

Outcome galois() {
  Outcome o;
  std::uint64_t n1 = 0, n2 = 0, n3 = 0;
  law(o, "L3.3-galois-alpha-lambda", {2, 2}, true, &n1);
  law(o, "L3.3-galois-eta-alpha", {2, 2}, true, &n2);
  law(o, "L3.3-galois-fission-fusion", {2, 2}, true, &n3);
  for (const char* id : {"L3.3-fusion-monotone", "L3.3-fusion-extensive", "L3.3-fusion-idempotent",
                         "L3.3-fission-monotone", "L3.3-fission-reductive", "L3.3-fission-idempotent"}) {
    law(o, id, {2, 2}, true);
  }
  if (n1 != 256 * 16 || n2 != 256 * 16 || n3 != 256 * 256) o.fail("unexpected tuple counts");
  o.note(std::to_string(n1) + ", " + std::to_string(n2) + ", " + std::to_string(n3) + " tuples");
  return o;
}

Outcome categories() {
  Outcome o;
  std::uint64_t od = 0, id = 0, iu = 0;
  law(o, "L2.2-det-assoc", {2, 2}, true, &od);
  law(o, "L3.2-idet-assoc", {2, 2}, true, &id);
  law(o, "L4-iuniv-assoc", {2, 2}, true, &iu);
  for (const char* l : {"L2.2-det-closed", "L3.2-idet-closed", "L4-iuniv-closed", "L2.2-univalent-closed",
                        "L2.2-univalent-assoc", "L2.2-peleg-left-unit", "L2.2-peleg-right-unit"}) {
    law(o, l, {2, 2}, true);
  }
  if (od != 4096) o.fail("outer deterministic triples: " + std::to_string(od));
  if (id > 27 * 27 * 27) o.fail("inner deterministic triples: " + std::to_string(id));
  if (iu != 64 * 64 * 64) o.fail("inner univalent triples: " + std::to_string(iu));
  o.note(std::to_string(od) + ", " + std::to_string(id) + ", " + std::to_string(iu) + " triples");
  return o;
}

Outcome fixpoints() {
  Outcome o;
  const char* characterisations[] = {"L2.2-fix-inner-univalent", "L2.2-fix-inner-total", "L2.2-fix-inner-deterministic",
                         "L2.2-fix-inner-deterministic-unit", "L2.2-fix-outer-univalent", "L2.2-fix-outer-total",
                         "L2.2-fix-up-closed", "L2.2-fix-down-closed", "L3.3-fix-fusion", "L3.3-fix-fission"};
  for (const char* id : characterisations) {
    law(o, id, {2, 2}, true);
    law(o, id, {2, 3}, true);
  }
  std::size_t n = 0;
  for (const MRel& r : mrels(2, 3)) {
    ++n;
    const PropertyFlags f = classify_mrel(r);
    const FixpointClass c = fixpoint_class(r);
    if (c.is_fix_fusion() != f.outer_deterministic) o.fail("fusion fixpoints");
    if (c.is_fix_fission() != f.inner_deterministic) o.fail("fission fixpoints");
    if ((fusion(r) == r) != f.outer_deterministic || (fission(r) == r) != f.inner_deterministic) o.fail("direct");
  }
  for (const Law& l : registry()) {
    if (l.id.rfind("L5-", 0) == 0) law(o, l.id, {2, 2}, true);
  }
  o.note(std::to_string(n) + " multirelations at 2x3");
  return o;
}

Outcome basis() {
  Outcome o;
  std::size_t n = 0;
  for (const Law& l : registry()) {
    if (l.id.rfind("APX-", 0) != 0) continue;
    ++n;
    law(o, l.id, {2, 2}, true);
    law(o, l.id, {1, 2}, true);
    law(o, l.id, {3, 3}, false);  // clamped to what the powerset caps allow
  }
  o.note(std::to_string(n) + " derived definitions");
  return o;
}

std::string run_capture(const std::string& cmd, int& status) {
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), got);
  const int raw = pclose(p);
  status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return out;
}

Outcome full_suite(const std::string& cli) {
  Outcome o;
  if (cli.empty()) {
    o.fail("no CLI path given");
    return o;
  }
  const std::string cmd = "\"" + cli + "\" check --all --sizes 2,2 --seed 7 --json --jobs 1";
  int s1 = 0, s2 = 0;
  const std::string a = run_capture(cmd, s1);
  const std::string b = run_capture(cmd, s2);
  if (s1 != 0 || s2 != 0) o.fail("exit status " + std::to_string(s1) + "/" + std::to_string(s2));
  if (a != b) o.fail("reports differ between runs");
  if (a.empty()) o.fail("empty report");
  try {
    const Json j = Json::parse(a);
    o.note(std::to_string(j.at("summary").at("as_expected").get<int>()) + "/" +
           std::to_string(j.at("summary").at("laws").get<int>()) + " laws as declared, " +
           std::to_string(a.size()) + " identical bytes");
  } catch (const std::exception& e) {
    o.fail(std::string("report is not JSON: ") + e.what());
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  bool all_ok = true;
  auto run = [&](int n, const char* title, auto fn, double budget_ms) {
    const auto t = Clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    report(n, title, o, ms_since(t), budget_ms, all_ok);
  };
  run(1, "round-trip bijections", round_trips, 1000);
  run(2, "Peleg composition matches the choice-function oracle", peleg_oracle, 60000);
  run(3, "pinned witnesses reproduce", pinned_witnesses, 60000);
  run(4, "Galois-connection suite", galois, 30000);
  run(5, "category suites", categories, 300000);
  run(6, "fixpoint suites", fixpoints, 300000);
  run(7, "basis concordance", basis, 600000);
  run(8, "full check --all, byte-identical reports", [&] { return full_suite(cli); }, 600000);
  return all_ok ? EXIT_SUCCESS : EXIT_FAILURE;
}
