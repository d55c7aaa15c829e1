// Acceptance suite: one pass/fail line per criterion, nonzero exit when
// anything fails. argv[1] must be the path to the halg CLI binary (used by
// the determinism criterion).

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "halg/conjectures.hpp"
#include "halg/corpus.hpp"
#include "halg/json_io.hpp"

using namespace halg;

namespace {

struct Criterion {
  std::string name;
  std::function<void(std::ostringstream&)> run;  // throws or CHECKs via helper
};

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& what) {
  if (!cond) throw Failure(what);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string g_halg_bin;

// ---------------------------------------------------------------------------
// 1. Example 2.8 reproduction

void criterion_example28(std::ostringstream& log) {
  auto t0 = std::chrono::steady_clock::now();
  CorpusEntry e = corpus_entry("example2.8");
  require(e.algebra->dim() == 5, "Lambda must have dim 5");
  require(e.skew && e.skew->dim() == 10, "Lambda G must have dim 10");

  Workspace ws(e.skew);
  GabrielData g = gabriel_quiver(ws);
  require(g.vertex_labels.size() == 3, "quiver of Lambda G must have 3 vertices");
  require(g.quiver.arrows.size() == 2, "quiver of Lambda G must have 2 arrows");
  require(g.quiver.arrows[0].to == g.quiver.arrows[1].to, "arrows must share their target");
  require(g.quiver.arrows[0].from != g.quiver.arrows[1].from, "arrows must have distinct sources");
  require(g.quiver.arrows[0].from != g.quiver.arrows[0].to &&
              g.quiver.arrows[1].from != g.quiver.arrows[1].to,
          "no loops in the quiver of Lambda G");

  std::vector<std::size_t> dims = g.simple_dims;
  std::sort(dims.begin(), dims.end());
  require(dims == std::vector<std::size_t>({1, 1, 2}), "simple dims of Lambda G must be {1,1,2}");

  double secs = seconds_since(t0);
  log << "dims 5/10, quiver 3 vertices + 2 arrows into one target, simples {1,1,2}, "
      << secs << " s";
  require(secs < 5.0, "runtime must stay under 5 s");
}

// ---------------------------------------------------------------------------
// 2. Lemma 3.1 suite

void criterion_lemma31(std::ostringstream& log) {
  auto t0 = std::chrono::steady_clock::now();
  std::size_t cases = 0;
  for (const char* name : {"kx2", "a2", "example2.8"}) {
    CorpusEntry e = corpus_entry(name);
    for (std::size_t n : {std::size_t(2), std::size_t(3)}) {
      Workspace ws(e.algebra);
      ExtensionSpec spec;
      spec.kind = ExtensionSpec::Kind::Matrix;
      spec.matrix_n = n;
      TransferReport r = verify_lemma31(ws, spec, 10);
      require(r.holds, std::string(name) + " matrix:" + std::to_string(n));
      ++cases;
    }
    if (e.action) {
      Workspace ws(e.algebra);
      ExtensionSpec spec;
      spec.kind = ExtensionSpec::Kind::Skew;
      spec.action = e.action;
      TransferReport r = verify_lemma31(ws, spec, 10);
      require(r.holds, std::string(name) + " skew");
      ++cases;
    }
  }
  double secs = seconds_since(t0);
  log << cases << " extensions agree on both one-sided ids and flags, " << secs << " s";
  require(secs < 60.0, "suite must finish under 60 s");
}

// ---------------------------------------------------------------------------
// 3. Adjunction counts

void criterion_adjunction(std::ostringstream& log) {
  std::size_t pairs = 0;
  for (const char* name : {"kx2", "example2.8"}) {
    CorpusEntry e = corpus_entry(name);
    Workspace ws(e.algebra);
    Workspace wskew(e.skew);
    std::vector<Module> base = ws.simples();
    for (const auto& p : ws.projectives()) base.push_back(p);
    base.push_back(Module::regular(e.algebra));
    std::vector<Module> over_skew = wskew.simples();
    over_skew.push_back(Module::regular(e.skew));
    TransferReport r = verify_adjoint(ws, wskew, base, over_skew);
    require(r.holds, std::string("adjunction counts over ") + name);
    pairs += r.evidence["pairs"].get<std::size_t>();
  }
  require(pairs >= 20, "need at least 20 (M, N) pairs");
  log << pairs << " pairs, both adjunction count identities exact";
}

// ---------------------------------------------------------------------------
// 4. Prop 2.7 suite

void criterion_prop27(std::ostringstream& log) {
  std::size_t modules = 0;
  for (const char* name : {"kx2", "example2.8"}) {
    CorpusEntry e = corpus_entry(name);
    Workspace ws(e.algebra);
    Workspace wskew(e.skew);
    std::vector<Module> mods = ws.simples();
    for (const auto& p : ws.projectives()) mods.push_back(p);
    for (const Module& m : mods) {
      TransferReport r = verify_prop27(ws, e.skew, m);
      require(r.holds, std::string("prop 2.7 over ") + name);
      ++modules;
    }
    require(verify_prop27_counit(wskew, Module::regular(e.skew)).holds,
            std::string("counit splits over ") + name);
  }
  log << modules << " modules: HFM decomposed with certificates, split monos found";
}

// ---------------------------------------------------------------------------
// 5. Prop 3.5 dimension identity

void criterion_prop35(std::ostringstream& log) {
  std::size_t cases = 0;
  for (const char* name : {"kx2", "example2.8"}) {
    CorpusEntry e = corpus_entry(name);
    Workspace ws(e.algebra);
    Workspace wskew(e.skew);
    Module reg = Module::regular(e.algebra);
    for (const Module& s : ws.simples()) {
      TransferReport r = verify_prop35(ws, wskew, s, reg, 5);
      require(r.holds, std::string("prop 3.5 over ") + name);
      ++cases;
    }
  }
  log << cases << " (simple, regular) cases, factor |G| exact for i = 0..5";
}

// ---------------------------------------------------------------------------
// 6. Ext oracle equivalence

void criterion_ext_oracles(std::ostringstream& log) {
  std::size_t checks = 0;
  for (const char* name : {"kx2", "a2", "example2.8", "kx2-skew", "example2.8-skew"}) {
    CorpusEntry e = corpus_entry(name);
    Workspace ws(e.algebra);
    std::vector<Module> mods = ws.simples();
    mods.push_back(Module::regular(e.algebra));
    for (const Module& m : mods) {
      for (const Module& n : mods) {
        for (std::size_t i = 0; i <= 5; ++i) {
          std::size_t via_proj = ext_dim(ws, m, n, i);
          std::size_t via_inj = ext_dim_via_injective(ws, m, n, i);
          require(via_proj == via_inj,
                  std::string("Ext routes disagree over ") + name + " at i = " + std::to_string(i));
          ++checks;
        }
      }
    }
  }
  log << checks << " (M, N, i) triples, projective and injective routes agree exactly";
}

// ---------------------------------------------------------------------------
// 7. Checker sanity on the corpus

void criterion_checker_sanity(std::ostringstream& log) {
  std::vector<std::string> algebras = {"kx2",           "a2",
                                       "example2.8",    "threepoints",
                                       "kx2-skew",      "example2.8-skew",
                                       "threepoints-z3-skew", "threepoints-s3-skew"};
  std::size_t checked = 0;
  for (const std::string& name : algebras) {
    CorpusEntry e = corpus_entry(name);
    Workspace ws(e.algebra, 0);

    NakayamaResult nc = nakayama_condition(ws, 10);
    bool nc_holds = nc.verdict.kind == VerdictKind::HoldsDefinitively;
    require(nc_holds == nc.self_injective,
            "NC condition <=> self-injective failed on " + name + " (counterexample candidate)");
    require(!nc.counterexample_candidate, "NC counterexample candidate on " + name);

    AuslanderResult agc = auslander_condition(ws, 10);
    if (agc.verdict.kind == VerdictKind::HoldsDefinitively) {
      require(agc.gorenstein_known && agc.gorenstein,
              "AGC holds but not Gorenstein on " + name + " (counterexample candidate)");
    }
    require(!agc.counterexample_candidate, "AGC counterexample candidate on " + name);

    ConditionVerdict gsc = gsc_check(ws, 10);
    require(gsc.kind != VerdictKind::ViolatedAt, "GSC violated on " + name);

    for (const SncProbe& p : gnc_probe(ws, 10)) {
      require(p.witness_found && p.witness_index <= 2,
              "GNC witness must appear at i <= 2 on " + name);
    }
    ++checked;
  }
  log << checked << " corpus algebras: NC<=>self-inj, AGC=>Gorenstein, GSC never violated, "
      << "GNC witnesses at i <= 2";
}

// ---------------------------------------------------------------------------
// 8. CLI determinism

std::string run_cli(const std::string& args, int* exit_code) {
  std::string cmd = g_halg_bin + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  require(pipe != nullptr, "cannot run " + cmd);
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  if (exit_code) *exit_code = WEXITSTATUS(status);
  return out;
}

void criterion_cli_determinism(std::ostringstream& log) {
  require(!g_halg_bin.empty(), "halg binary path missing (argv[1])");
  std::vector<std::string> commands = {
      "gabriel-quiver --corpus example2.8-skew --seed 1",
      "verify lemma31 --corpus example2.8 --cutoff 10 --seed 1",
      "verify prop27 --corpus kx2 --seed 3",
      "verify adjoint --corpus kx2 --seed 2",
      "check nc --corpus kx2 --seed 1",
      "check gsc --corpus a2 --seed 1",
      "probe gnc --corpus example2.8 --seed 4",
      "resolve --corpus a2 --direction injective",
      "matrix-ext --corpus kx2 -n 2",
      "corpus-list",
  };
  for (const std::string& cmd : commands) {
    int code1 = 0, code2 = 0;
    std::string a = run_cli(cmd, &code1);
    std::string b = run_cli(cmd, &code2);
    require(!a.empty(), "no output from: " + cmd);
    require(a == b, "outputs differ between runs: " + cmd);
    require(code1 == code2, "exit codes differ between runs: " + cmd);
  }
  log << commands.size() << " CLI invocations byte-identical across repeated runs";
}

// ---------------------------------------------------------------------------
// 9. Twist involution

void criterion_twist_involution(std::ostringstream& log) {
  std::size_t checks = 0;
  for (const char* name : {"kx2", "example2.8", "threepoints-z3", "threepoints-s3", "star-s3"}) {
    CorpusEntry e = corpus_entry(name);
    Workspace ws(e.algebra);
    std::vector<Module> mods = ws.simples();
    for (const auto& p : ws.projectives()) mods.push_back(p);
    mods.push_back(Module::regular(e.algebra));
    for (const Module& m : mods) {
      for (std::size_t s = 0; s < e.action->size(); ++s) {
        Module back = twist(twist(m, e.action->image(s)), e.action->image(s).inverse());
        require(back == m, std::string("twist involution broke over ") + name);
        ++checks;
      }
    }
  }
  log << checks << " (module, group element) pairs with exact matrix equality";
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_halg_bin = argv[1];

  std::vector<Criterion> criteria = {
      {"1 Example 2.8 reproduction", criterion_example28},
      {"2 Lemma 3.1 suite", criterion_lemma31},
      {"3 adjunction counts (Lemma 2.4)", criterion_adjunction},
      {"4 Prop 2.7 suite", criterion_prop27},
      {"5 Prop 3.5 dimension identity", criterion_prop35},
      {"6 Ext oracle equivalence", criterion_ext_oracles},
      {"7 checker sanity on the corpus", criterion_checker_sanity},
      {"8 CLI determinism", criterion_cli_determinism},
      {"9 twist involution", criterion_twist_involution},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    std::ostringstream log;
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(log);
      std::printf("[PASS] criterion %s: %s (%.1f s)\n", c.name.c_str(), log.str().c_str(),
                  seconds_since(t0));
    } catch (const std::exception& e) {
      ++failures;
      std::printf("[FAIL] criterion %s: %s\n", c.name.c_str(), e.what());
    }
    std::fflush(stdout);
  }
  if (failures > 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all %zu acceptance criteria passed\n", criteria.size());
  return 0;
}
