#include "fitres/scenario.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "fitres/deformation.hpp"
#include "fitres/fiber_product.hpp"
#include "fitres/property.hpp"
#include "fitres/stretched.hpp"

namespace fitres {

namespace {

struct Node {
  int line = 0;
  std::vector<std::string> head;
  std::vector<Node> children;

  const std::string& key() const { return head[0]; }
  [[noreturn]] void error(const std::string& msg) const {
    fail(Err::ParseError, "line " + std::to_string(line) + ": " + msg);
  }
};

// '=' and list brackets/quotes read as whitespace, so both `e 3` and
// `e = 3` (and `units = [1, 1]`) parse identically
std::vector<std::string> split_words(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ' ' || c == '\t' || c == '=' || c == '[' || c == ']' || c == '"') {
      if (!cur.empty()) {
        out.push_back(cur);
        cur.clear();
      }
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

// line-oriented parser: `header {` opens a block, `}` closes, `;` splits lines
std::vector<Node> parse_blocks(const std::string& text) {
  std::vector<Node> root;
  std::vector<Node*> stack;
  int lineno = 0;
  std::istringstream in(text);
  std::string raw;
  while (std::getline(in, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    std::string piece;
    std::vector<std::string> pieces;
    for (char c : raw) {
      if (c == ';') {
        pieces.push_back(piece);
        piece.clear();
      } else {
        piece.push_back(c);
      }
    }
    pieces.push_back(piece);
    for (auto& p : pieces) {
      auto words = split_words(p);
      if (words.empty()) continue;
      bool opens = false;
      if (words.back() == "{") {
        opens = true;
        words.pop_back();
      }
      if (words.size() == 1 && words[0] == "}") {
        if (stack.empty()) fail(Err::ParseError, "line " + std::to_string(lineno) + ": stray }");
        stack.pop_back();
        continue;
      }
      Node node;
      node.line = lineno;
      node.head = std::move(words);
      if (node.head.empty() && opens)
        fail(Err::ParseError, "line " + std::to_string(lineno) + ": block without header");
      std::vector<Node>& target = stack.empty() ? root : stack.back()->children;
      target.push_back(std::move(node));
      if (opens) stack.push_back(&target.back());
    }
  }
  if (!stack.empty()) fail(Err::ParseError, "unterminated block");
  return root;
}

std::string rest_of(const Node& n) {
  std::string s;
  for (size_t i = 1; i < n.head.size(); ++i) {
    if (i > 1) s += " ";
    s += n.head[i];
  }
  return s;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  for (auto& p : out) {
    size_t a = p.find_first_not_of(" \t");
    size_t b = p.find_last_not_of(" \t");
    p = a == std::string::npos ? "" : p.substr(a, b - a + 1);
  }
  out.erase(std::remove(out.begin(), out.end(), std::string()), out.end());
  return out;
}

const Node* child(const Node& n, const std::string& key) {
  for (const auto& c : n.children)
    if (c.key() == key) return &c;
  return nullptr;
}

std::string child_value(const Node& n, const std::string& key, const std::string& dflt) {
  const Node* c = child(n, key);
  return c ? rest_of(*c) : dflt;
}

int child_int(const Node& n, const std::string& key, int dflt) {
  const Node* c = child(n, key);
  if (!c) return dflt;
  try {
    return std::stoi(rest_of(*c));
  } catch (...) {
    c->error("expected an integer for " + key);
  }
}

bool child_bool(const Node& n, const std::string& key, bool dflt) {
  const Node* c = child(n, key);
  if (!c) return dflt;
  std::string v = rest_of(*c);
  if (v == "true" || v == "1") return true;
  if (v == "false" || v == "0") return false;
  c->error("expected true/false for " + key);
}

enum class Status { Pass, Fail, Inconclusive };

struct ModuleDecl {
  RingPtr ring;
  bool image = false;
  std::unique_ptr<GradedMatrix> matrix; // presentation (coker) or generators (image)
};

struct State {
  uint32_t p = 101;
  uint64_t seed = 1;
  int extra_slack = 0;
  bool structured = false;

  std::map<std::string, RingPtr> rings;
  std::map<std::string, FiberProductRing> fps;
  std::map<std::string, StretchedGorensteinRing> sgs;
  std::map<std::string, DeformationPair> pairs;
  std::map<std::string, ModuleDecl> modules;
  std::map<std::string, Resolution> res_cache;

  std::ostringstream out;
  int task_no = 0;
  bool any_fail = false;
  bool any_inconclusive = false;

  RingPtr ring_of(const Node& n, const std::string& name) {
    auto it = rings.find(name);
    if (it == rings.end()) n.error("unknown ring " + name);
    return it->second;
  }
  const ModuleDecl& module_of(const Node& n, const std::string& name) {
    auto it = modules.find(name);
    if (it == modules.end()) n.error("unknown module " + name);
    return it->second;
  }

  Resolution& resolve(const Node& n, const std::string& name, int n_max) {
    int slack = 2 + extra_slack;
    std::string key = name + "#" + std::to_string(n_max) + "#" + std::to_string(slack);
    auto it = res_cache.find(key);
    if (it != res_cache.end()) return it->second;
    const ModuleDecl& md = module_of(n, name);
    Resolution r = md.image
                       ? Resolution::of_image(*md.matrix, n_max, slack)
                       : Resolution::of_module(ModulePresentation{md.ring, *md.matrix}, n_max,
                                               slack);
    return res_cache.emplace(key, std::move(r)).first->second;
  }

  void record(const std::string& line) { out << line << "\n"; }
  void status_line(Status s) {
    switch (s) {
      case Status::Pass: record("-- result: pass"); break;
      case Status::Fail:
        record("-- result: FAIL");
        any_fail = true;
        break;
      case Status::Inconclusive:
        record("-- result: inconclusive");
        any_inconclusive = true;
        break;
    }
  }
};

GradedMatrix parse_matrix_block(const Node& n, const RingPtr& ring) {
  std::vector<std::vector<FpPoly>> rows;
  for (const auto& c : n.children) {
    if (c.key() != "row") continue;
    std::vector<FpPoly> row;
    for (const auto& t : split_list(rest_of(c))) row.push_back(ring->parse(t));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) n.error("matrix block needs at least one row");
  size_t cols = rows[0].size();
  for (const auto& r : rows)
    if (r.size() != cols) n.error("ragged matrix rows");
  std::vector<int> tdeg;
  {
    std::string td = child_value(n, "target_degrees", "");
    if (td.empty()) {
      tdeg.assign(rows.size(), 0);
    } else {
      for (const auto& t : split_list(td)) tdeg.push_back(std::stoi(t));
      if (tdeg.size() != rows.size()) n.error("target_degrees count mismatch");
    }
  }
  // column degrees inferred from the entries
  std::vector<int> cdeg(cols, -1);
  for (size_t j = 0; j < cols; ++j) {
    for (size_t i = 0; i < rows.size(); ++i) {
      if (rows[i][j].is_zero()) continue;
      int d = tdeg[i] + rows[i][j].degree();
      if (cdeg[j] < 0) cdeg[j] = d;
      else if (cdeg[j] != d) n.error("column " + std::to_string(j) + " is not homogeneous");
    }
    if (cdeg[j] < 0) n.error("column " + std::to_string(j) + " is zero; no degree to infer");
  }
  GradedMatrix A({ring, cdeg}, {ring, tdeg});
  for (size_t j = 0; j < cols; ++j)
    for (size_t i = 0; i < rows.size(); ++i)
      if (!rows[i][j].is_zero()) A.set_entry(static_cast<int>(i), static_cast<int>(j),
                                             rows[i][j]);
  return A;
}

void declare_module(State& st, const Node& n) {
  if (n.head.size() != 4 || n.head[2] != "over") n.error("expected: module NAME over RING");
  std::string name = n.head[1];
  RingPtr ring = st.ring_of(n, n.head[3]);
  std::string kind = child_value(n, "kind", "coker");
  ModuleDecl md;
  md.ring = ring;
  if (kind == "residue_field") {
    md.matrix = std::make_unique<GradedMatrix>(residue_field_presentation(ring).presentation);
  } else if (kind == "cyclic") {
    std::vector<FpPoly> gens;
    for (const auto& t : split_list(child_value(n, "rels", "")))
      gens.push_back(ring->parse(t));
    md.matrix = std::make_unique<GradedMatrix>(cyclic_presentation(ring, gens).presentation);
  } else if (kind == "coker" || kind == "image") {
    md.image = kind == "image";
    md.matrix = std::make_unique<GradedMatrix>(parse_matrix_block(n, ring));
  } else {
    n.error("unknown module kind " + kind);
  }
  st.modules.erase(name);
  st.modules.emplace(name, std::move(md));
}

const FiberProductRing& fp_of_ring(State& st, const Node& n, const RingPtr& ring) {
  for (const auto& [name, fp] : st.fps)
    if (fp.total == ring) return fp;
  n.error("module's ring is not a declared fiber product");
}

const StretchedGorensteinRing& sg_of_ring(State& st, const Node& n, const RingPtr& ring) {
  for (const auto& [name, sg] : st.sgs)
    if (sg.ring == ring) return sg;
  n.error("module's ring is not a declared stretched Gorenstein ring");
}

// === tasks =================================================================

void task_resolve(State& st, const Node& n) {
  int n_max = child_int(n, "n_max", 6);
  Resolution& res = st.resolve(n, n.head[2], n_max);
  st.record(res.betti_table());
  Status s = Status::Pass;
  std::string expect = child_value(n, "expect_betti", "");
  if (!expect.empty()) {
    auto parts = split_list(expect);
    for (size_t i = 0; i < parts.size(); ++i) {
      int want = std::stoi(parts[i]);
      int got = static_cast<int>(i) <= res.length() || res.finite()
                    ? res.betti(static_cast<int>(i))
                    : -1;
      if (got != want) {
        st.record("betti mismatch at n=" + std::to_string(i) + ": got " + std::to_string(got) +
                  " want " + std::to_string(want));
        s = Status::Fail;
      }
    }
  }
  if (st.structured)
    for (int i = 0; i <= res.length(); ++i) {
      std::map<int, int> counts;
      for (int g : res.free_module(i).gen_degrees) counts[g]++;
      std::string graded;
      for (const auto& [d, c] : counts)
        graded += " b" + std::to_string(i) + "," + std::to_string(d) + "=" + std::to_string(c);
      st.record("record task=" + std::to_string(st.task_no) + " op=betti n=" + std::to_string(i) +
                " value=" + std::to_string(res.betti(i)) + graded);
    }
  st.status_line(s);
}

GradedIdeal parse_expect_ideal(const RingPtr& ring, const std::string& text) {
  std::vector<FpPoly> gens;
  for (const auto& t : split_list(text)) gens.push_back(ring->parse(t));
  return GradedIdeal(ring, std::move(gens));
}

void emit_verdict(State& st, const RingPtr& ring, const MinorVerdict& v) {
  st.record(v.to_line(ring));
  if (st.structured) {
    std::string w = v.witness ? ring->to_string(*v.witness) : "-";
    st.record("record task=" + std::to_string(st.task_no) + " op=minors n=" +
              std::to_string(v.n) + " r=" + std::to_string(v.r) + " rel=" + v.rel_string() +
              " certified=" + (v.certified ? "1" : "0") + " ideal=" +
              (v.rel == MinorRel::Equal ? (v.r == 1 ? "m" : "m^" + std::to_string(v.r))
                                        : v.ideal(ring).to_string()) +
              " witness=" + w);
  }
}

void task_minors(State& st, const Node& n) {
  int nn = child_int(n, "n", 1);
  int r = child_int(n, "r", 1);
  if (r > 6) n.error("r is capped at 6");
  int n_max = child_int(n, "n_max", nn);
  Resolution& res = st.resolve(n, n.head[2], std::max(nn, n_max));
  MinorVerdict v = minors_of_resolution(res, nn, r);
  const RingPtr& ring = st.module_of(n, n.head[2]).ring;
  emit_verdict(st, ring, v);
  Status s = Status::Pass;
  std::string expect = child_value(n, "expect", "");
  if (!expect.empty()) {
    bool ok = (expect == "equal" && v.rel == MinorRel::Equal) ||
              (expect == "proper" && v.rel == MinorRel::Proper) ||
              (expect == "zero" && v.rel == MinorRel::Zero);
    if (!ok) s = Status::Fail;
  }
  st.status_line(s);
}

void task_minors_range(State& st, const Node& n) {
  int n_from = child_int(n, "n_from", 1);
  int n_to = child_int(n, "n_to", 6);
  int r = child_int(n, "r", 1);
  if (r > 6) n.error("r is capped at 6");
  const std::string name = n.head[2];
  const RingPtr& ring = st.module_of(n, name).ring;
  Resolution& res = st.resolve(n, name, n_to);
  Status s = Status::Pass;
  std::string odd_txt = child_value(n, "expect_odd", "");
  std::string even_txt = child_value(n, "expect_even", "");
  int equal_from = child_int(n, "expect_equal_from", -1);
  bool require_cert = child_bool(n, "require_certified", false);
  std::optional<GradedIdeal> odd_ideal, even_ideal;
  if (!odd_txt.empty()) odd_ideal = parse_expect_ideal(ring, odd_txt);
  if (!even_txt.empty()) even_ideal = parse_expect_ideal(ring, even_txt);
  for (int nn = n_from; nn <= std::min(n_to, res.length()); ++nn) {
    MinorVerdict v = minors_of_resolution(res, nn, r);
    emit_verdict(st, ring, v);
    if (require_cert && !v.certified) s = Status::Inconclusive;
    const std::optional<GradedIdeal>& want = nn % 2 ? odd_ideal : even_ideal;
    if (want) {
      GradedIdeal got = v.ideal(ring);
      int cap = std::max(want->max_generator_degree(), got.max_generator_degree());
      if (!v.ideal_exact || ideal_compare(got, *want, cap).rel != IdealRel::Equal) {
        st.record("  expected ideal " + want->to_string() + " at n=" + std::to_string(nn));
        s = Status::Fail;
      }
    }
    if (equal_from >= 0 && nn >= equal_from && v.rel != MinorRel::Equal) {
      st.record("  expected equality with m^r at n=" + std::to_string(nn));
      s = Status::Fail;
    }
  }
  if (res.length() < n_to) {
    st.record("  resolution ended at n=" + std::to_string(res.length()));
    if (s == Status::Pass) s = Status::Inconclusive;
  }
  st.status_line(s);
}

void task_betti_growth(State& st, const Node& n) {
  int n_max = child_int(n, "n_max", 8);
  Resolution& res = st.resolve(n, n.head[2], n_max);
  auto rep = betti_growth_check(res);
  st.record("growth factor 2e-l+h-1 = " + std::to_string(rep.factor) + ", mu = " +
            std::to_string(rep.mu));
  for (const auto& l : rep.lines) st.record("  " + l);
  st.status_line(rep.all_hold ? Status::Pass : Status::Fail);
}

void task_verify_fp(State& st, const Node& n) {
  const auto& md = st.module_of(n, n.head[2]);
  const FiberProductRing& fp = fp_of_ring(st, n, md.ring);
  int r = child_int(n, "r", 1);
  if (r > 6) n.error("r is capped at 6");
  int n_to = child_int(n, "n_to", 8);
  bool observe = child_bool(n, "observe", false);
  ModulePresentation M{md.ring, *md.matrix};
  if (md.image) n.error("verify_fp expects a cokernel-presented module");
  auto rep = verify_theorem_fp(fp, M, r, n_to, observe);
  st.record("embdim(S) = " + std::to_string(fp.e1) + ", embdim(T) = " + std::to_string(fp.e2));
  if (!rep.hypothesis_note.empty()) st.record("hypothesis: " + rep.hypothesis_note);
  for (const auto& tr : rep.per_r) {
    st.record("r = " + std::to_string(tr.r) + ": bound ceil(2r/(e1 e2)) + 8 = " +
              std::to_string(tr.bound) + ", onset = " + std::to_string(tr.onset) +
              ", beta>=r from n = " + std::to_string(tr.beta_onset));
    for (const auto& v : tr.verdicts) emit_verdict(st, fp.total, v);
  }
  st.status_line(rep.all_pass && rep.hypothesis_ok ? Status::Pass : Status::Fail);
}

void task_verify_sg(State& st, const Node& n) {
  const auto& md = st.module_of(n, n.head[2]);
  const StretchedGorensteinRing& sg = sg_of_ring(st, n, md.ring);
  int r = child_int(n, "r", 1);
  if (r > 6) n.error("r is capped at 6");
  int n_to = child_int(n, "n_to", 8);
  bool observe = child_bool(n, "observe", false);
  ModulePresentation M{md.ring, *md.matrix};
  SgTheoremReport rep;
  if (md.image) {
    // image modules run through the same machinery via their presentations
    Resolution pre = Resolution::of_image(*md.matrix, 1);
    M = pre.module();
  }
  rep = verify_theorem_sg(sg, M, r, n_to, observe);
  if (!rep.hypothesis_note.empty()) st.record("hypothesis: " + rep.hypothesis_note);
  for (const auto& tr : rep.per_r) {
    st.record("r = " + std::to_string(tr.r) + ": constructive bound = " +
              std::to_string(tr.constructive_bound) + ", onset = " + std::to_string(tr.onset));
    for (const auto& v : tr.verdicts) emit_verdict(st, sg.ring, v);
  }
  if (observe && !rep.hypothesis_ok) {
    st.record("observe mode: hypothesis violated, verdicts reported without assertion");
    st.status_line(Status::Pass);
    return;
  }
  st.status_line(rep.all_pass ? Status::Pass : Status::Fail);
}

void task_socle_witness(State& st, const Node& n) {
  RingPtr ring = st.ring_of(n, n.head[2]);
  int nn = child_int(n, "n", 1);
  auto rep = socle_witness(ring, nn, child_int(n, "extra", 2));
  st.record("spliced complex for M_" + std::to_string(nn) + ": minimal=" +
            (rep.minimal ? "yes" : "no") + " exact(through deg " +
            std::to_string(rep.exactness_cap) + ")=" + (rep.exact ? "yes" : "no"));
  st.record("I(n=" + std::to_string(nn) + ", r=1) = " + rep.minor_ideal + " = soc(R): " +
            (rep.equals_socle ? "yes" : "no") + "; differs from m: " +
            (rep.differs_from_m ? "yes" : "no"));
  st.record("beta0(M_n) = " + std::to_string(rep.beta0) + ", dual cross-check = " +
            std::to_string(rep.beta0_dual));
  if (st.structured)
    st.record("record task=" + std::to_string(st.task_no) + " op=socle_witness n=" +
              std::to_string(nn) + " ideal=" + rep.minor_ideal + " equals_socle=" +
              (rep.equals_socle ? "1" : "0") + " pass=" + (rep.pass ? "1" : "0"));
  st.status_line(rep.pass ? Status::Pass : Status::Fail);
}

void task_lift_control(State& st, const Node& n) {
  auto it = st.fps.find(n.head[2]);
  if (it == st.fps.end()) n.error("unknown fiber product " + n.head[2]);
  const FiberProductRing& fp = it->second;
  int n_max = child_int(n, "n_max", 3);
  int cap = child_int(n, "cap", 4);
  bool from_left = child_value(n, "side", "left") == "left";
  Resolution res = Resolution::of_module(
      residue_field_presentation(from_left ? fp.left : fp.right), n_max);
  auto lifted = lift_resolution_complex(res, fp, from_left);
  std::vector<const GradedMatrix*> ptrs;
  for (auto& d : lifted) ptrs.push_back(&d);
  auto rep = verify_exactness(ptrs, cap);
  st.record(std::string("lifted complex of k over the ") + (from_left ? "left" : "right") +
            " factor: is_complex=" + (rep.is_complex ? "yes" : "no"));
  for (const auto& h : rep.homology)
    st.record("  homology at position " + std::to_string(h.position) + " degree " +
              std::to_string(h.degree) + ": dim " + std::to_string(h.dim));
  bool expect_nonzero = child_bool(n, "expect_nonzero_homology", true);
  bool nonzero = !rep.homology.empty();
  st.status_line(rep.is_complex && (nonzero == expect_nonzero) ? Status::Pass : Status::Fail);
}

void task_moore(State& st, const Node& n) {
  auto it = st.fps.find(child_value(n, "fp", ""));
  if (it == st.fps.end()) n.error("moore needs `fp NAME` of a declared fiber product");
  const FiberProductRing& fp = it->second;
  const auto& md = st.module_of(n, n.head[2]);
  if (md.ring != fp.left) n.error("module must live over the left factor");
  if (md.image) n.error("moore expects a cokernel-presented module");
  int n_max = child_int(n, "n_max", 5);
  ModulePresentation M{md.ring, *md.matrix};
  auto moore = moore_resolution(M, fp, n_max);
  Status s = Status::Pass;
  // block-shape audit and minimality
  for (int nn = 1; nn <= moore.length(); ++nn) {
    std::string audit = moore.audit_block_shape(nn);
    if (!audit.empty()) {
      st.record("block audit n=" + std::to_string(nn) + ": " + audit);
      s = Status::Fail;
    }
    if (!moore.diffs[nn - 1].entries_in_m()) {
      st.record("not minimal at n=" + std::to_string(nn));
      s = Status::Fail;
    }
  }
  // exactness
  std::vector<const GradedMatrix*> ptrs;
  for (auto& d : moore.diffs) ptrs.push_back(&d);
  int cap = 0;
  for (const auto& Fm : moore.frees) cap = std::max(cap, Fm.max_degree());
  cap += 2;
  auto ex = verify_exactness(ptrs, cap);
  if (!ex.exact()) {
    st.record("moore complex not exact through degree " + std::to_string(cap));
    s = Status::Fail;
  }
  // ranks against the direct resolution over the total ring
  ModulePresentation MR = view_left_module_over_total(M, fp);
  Resolution direct = Resolution::of_module(MR, n_max, 2 + st.extra_slack);
  std::string ranks = "word-count ranks:", betti = "direct betti:     ";
  for (int nn = 0; nn <= moore.length(); ++nn) {
    ranks += " " + std::to_string(moore.rank(nn));
    betti += " " + std::to_string(direct.betti(nn));
    if (nn <= direct.length() && moore.rank(nn) != direct.betti(nn)) {
      st.record("rank mismatch at n=" + std::to_string(nn));
      s = Status::Fail;
    }
  }
  st.record(ranks);
  st.record(betti);
  st.status_line(s);
}

void task_verify_lift(State& st, const Node& n) {
  auto it = st.pairs.find(child_value(n, "pair", ""));
  if (it == st.pairs.end()) n.error("verify_lift needs `pair NAME` of a declared deformation");
  const DeformationPair& pair = it->second;
  const auto& md = st.module_of(n, n.head[2]);
  if (md.ring != pair.base) n.error("module must live over the base ring");
  if (md.image) n.error("verify_lift expects a cokernel-presented module");
  int r = child_int(n, "r", 1);
  if (r > 6) n.error("r is capped at 6");
  int n_to = child_int(n, "n_to", 8);
  ModulePresentation M{md.ring, *md.matrix};
  auto rep = verify_theorem_lift(pair, M, r, n_to);
  std::string ells = "ell =";
  for (int e : rep.ell) ells += " " + std::to_string(e);
  st.record(ells + ", N = " + std::to_string(rep.big_n) + ", start = " +
            std::to_string(rep.start));
  if (rep.shortcut_applies)
    st.record("m_base^r != 0: shortcut start = " + std::to_string(rep.shortcut_start));
  for (const auto& v : rep.total_verdicts) emit_verdict(st, pair.total, v);
  if (rep.inconclusive) {
    st.record("onsets not reached within the computed range");
    st.status_line(Status::Inconclusive);
  } else {
    st.status_line(rep.pass ? Status::Pass : Status::Fail);
  }
}

void task_shamash(State& st, const Node& n) {
  auto it = st.pairs.find(child_value(n, "pair", ""));
  if (it == st.pairs.end()) n.error("shamash needs `pair NAME` of a declared deformation");
  const DeformationPair& pair = it->second;
  const auto& md = st.module_of(n, n.head[2]);
  if (md.ring != pair.base) n.error("module must live over the base ring");
  if (md.image) n.error("shamash expects a cokernel-presented module");
  int n_max = child_int(n, "n_max", 6);
  ModulePresentation M{md.ring, *md.matrix};
  Resolution Fp = Resolution::of_module(M, n_max, 2 + st.extra_slack);
  auto G = shamash_converse(Fp, pair);
  Status s = Status::Pass;
  std::string sig = std::string("sigma: ") + (G.sigma_zero ? "zero" : "nonzero") +
                    (G.sigma_chain_map ? " (chain map)" : " (NOT a chain map)");
  if (!G.sigma_nonzero_steps.empty()) {
    sig += "; nonzero at n =";
    for (int k : G.sigma_nonzero_steps) sig += " " + std::to_string(k);
  }
  st.record(sig);
  // rank formula
  for (int nn = 1; nn <= G.length(); ++nn)
    if (G.rank(nn) != Fp.betti(nn) + Fp.betti(nn - 1)) {
      st.record("rank formula fails at n=" + std::to_string(nn));
      s = Status::Fail;
    }
  // exactness through cap
  std::vector<const GradedMatrix*> ptrs;
  for (auto& d : G.diffs) ptrs.push_back(&d);
  int cap = 0;
  for (const auto& Fm : G.frees) cap = std::max(cap, Fm.max_degree());
  cap += 2;
  auto ex = verify_exactness(ptrs, cap);
  if (!ex.exact()) {
    st.record("G(F') not exact through degree " + std::to_string(cap));
    s = Status::Fail;
  }
  std::string ranks = "G ranks:";
  for (int nn = 0; nn <= G.length(); ++nn) ranks += " " + std::to_string(G.rank(nn));
  st.record(ranks);
  if (child_bool(n, "compare_direct", false)) {
    ModulePresentation MR = view_base_module_over_total(M, pair);
    Resolution direct = Resolution::of_module(MR, n_max, 2 + st.extra_slack);
    std::string betti = "direct: ";
    for (int nn = 0; nn <= std::min(n_max, direct.length()); ++nn) {
      betti += " " + std::to_string(direct.betti(nn));
      if (direct.betti(nn) != G.rank(nn)) {
        st.record("betti disagreement at n=" + std::to_string(nn));
        s = Status::Fail;
      }
    }
    st.record(betti);
    int r_max = child_int(n, "compare_r", 2);
    for (int nn = 1; nn <= std::min(n_max, direct.length()); ++nn)
      for (int r = 1; r <= r_max; ++r) {
        MinorVerdict a = minors_vs_mr(G.diffs[nn - 1], nn, r, true, true);
        MinorVerdict b = minors_of_resolution(direct, nn, r);
        bool same = a.rel == b.rel;
        if (same && a.rel != MinorRel::Equal && a.ideal_exact && b.ideal_exact) {
          GradedIdeal ia = a.ideal(pair.total), ib = b.ideal(pair.total);
          int cap2 = std::max(ia.max_generator_degree(), ib.max_generator_degree());
          same = ideal_compare(ia, ib, cap2).rel == IdealRel::Equal;
        }
        if (!same) {
          st.record("minor ideal disagreement at n=" + std::to_string(nn) + " r=" +
                    std::to_string(r));
          s = Status::Fail;
        }
      }
  }
  st.status_line(s);
}

void task_tracked(State& st, const Node& n) {
  const auto& md = st.module_of(n, n.head[2]);
  const StretchedGorensteinRing& sg = sg_of_ring(st, n, md.ring);
  if (!md.image) n.error("tracked expects an image module whose first column is designated");
  int n_max = child_int(n, "n_max", 6);
  auto tr = tracked_resolution(sg, *md.matrix, n_max);
  st.record("tracked basis audit (gamma, delta) -> (2 delta, gamma):");
  st.record("  n  gamma  delta  beta_n  x1-block");
  for (const auto& stp : tr.steps) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "  %-3d%-7d%-7d%-8d%d", stp.n, stp.gamma, stp.delta,
                  stp.betti, stp.x1_block_size);
    st.record(buf);
    if (st.structured)
      st.record("record task=" + std::to_string(st.task_no) + " op=tracked n=" +
                std::to_string(stp.n) + " gamma=" + std::to_string(stp.gamma) + " delta=" +
                std::to_string(stp.delta) + " beta=" + std::to_string(stp.betti));
  }
  if (!tr.note.empty()) st.record("note: " + tr.note);
  st.status_line(tr.counts_ok && tr.power_bound_ok ? Status::Pass : Status::Fail);
}

void task_property_suite(State& st, const Node& n) {
  uint64_t seed = static_cast<uint64_t>(child_int(n, "seed", static_cast<int>(st.seed)));
  int size = child_int(n, "size", 4);
  int cases = child_int(n, "cases", 200);
  auto rep = run_property_suite(seed, size, cases);
  st.record(rep.to_text());
  if (st.structured)
    for (const auto& r : rep.results)
      st.record("record task=" + std::to_string(st.task_no) + " op=property name=" + r.name +
                " cases=" + std::to_string(r.cases_run) + " pass=" + (r.passed ? "1" : "0"));
  st.status_line(rep.all_pass ? Status::Pass : Status::Fail);
}

RingPtr declare_plain_ring(State& st, const Node& n, const std::string& name) {
  std::vector<std::string> vars;
  for (const auto& v : split_list(child_value(n, "vars", ""))) vars.push_back(v);
  if (vars.empty()) n.error("ring needs vars");
  std::vector<std::string> rels = split_list(child_value(n, "rels", ""));
  RingPtr r = make_ring(st.p, vars, rels);
  st.rings[name] = r;
  return r;
}

void run_task(State& st, const Node& n) {
  ++st.task_no;
  if (n.head.size() < 2) n.error("task needs an operation");
  const std::string& op = n.head[1];
  std::string target = n.head.size() > 2 ? n.head[2] : "";
  st.record("== task " + std::to_string(st.task_no) + ": " + op +
            (target.empty() ? "" : " " + target));
  if (op == "resolve") task_resolve(st, n);
  else if (op == "minors") task_minors(st, n);
  else if (op == "minors_range") task_minors_range(st, n);
  else if (op == "betti_growth") task_betti_growth(st, n);
  else if (op == "verify_fp") task_verify_fp(st, n);
  else if (op == "verify_sg") task_verify_sg(st, n);
  else if (op == "socle_witness") task_socle_witness(st, n);
  else if (op == "lift_control") task_lift_control(st, n);
  else if (op == "moore") task_moore(st, n);
  else if (op == "verify_lift") task_verify_lift(st, n);
  else if (op == "shamash") task_shamash(st, n);
  else if (op == "tracked") task_tracked(st, n);
  else if (op == "property_suite") task_property_suite(st, n);
  else n.error("unknown task " + op);
}

} // namespace

ScenarioResult run_scenario_text(const std::string& text, const std::string& name,
                                 const ScenarioOptions& opts) {
  State st;
  st.seed = opts.seed;
  st.extra_slack = opts.cap_override;
  st.structured = opts.structured;
  ScenarioResult result;
  st.record("# scenario: " + name);
  st.record("# seed: " + std::to_string(opts.seed));
  try {
    auto nodes = parse_blocks(text);
    for (const auto& n : nodes) {
      const std::string& key = n.key();
      if (key == "field") {
        st.p = static_cast<uint32_t>(std::stoul(rest_of(n)));
        if (!is_odd_prime(st.p)) n.error("field characteristic must be an odd prime");
      } else if (key == "ring") {
        if (n.head.size() != 2) n.error("expected: ring NAME { ... }");
        declare_plain_ring(st, n, n.head[1]);
        st.record("ring " + n.head[1] + " = " + st.rings[n.head[1]]->describe());
      } else if (key == "fiber_product") {
        if (n.head.size() != 2) n.error("expected: fiber_product NAME { ... }");
        const Node* left = child(n, "left");
        const Node* right = child(n, "right");
        if (!left || !right) n.error("fiber_product needs left/right blocks");
        std::string lname = left->head.size() > 1 ? left->head[1] : n.head[1] + ".left";
        std::string rname = right->head.size() > 1 ? right->head[1] : n.head[1] + ".right";
        RingPtr S = declare_plain_ring(st, *left, lname);
        RingPtr T = declare_plain_ring(st, *right, rname);
        FiberProductRing fp = fiber_product(S, T);
        st.rings[n.head[1]] = fp.total;
        st.fps.erase(n.head[1]);
        st.fps.emplace(n.head[1], std::move(fp));
        st.record("ring " + n.head[1] + " = " + st.rings[n.head[1]]->describe() +
                  "  (fiber product " + lname + " x_k " + rname + ")");
      } else if (key == "stretched_gorenstein") {
        if (n.head.size() != 2) n.error("expected: stretched_gorenstein NAME { ... }");
        int e = child_int(n, "e", 3);
        int s = child_int(n, "s", 2);
        std::vector<uint32_t> units;
        for (const auto& u : split_list(child_value(n, "units", "")))
          units.push_back(static_cast<uint32_t>(std::stoul(u)));
        if (units.empty()) units.assign(e - 1, 1);
        StretchedGorensteinRing sg = build_stretched(st.p, e, s, units);
        st.rings[n.head[1]] = sg.ring;
        st.sgs.erase(n.head[1]);
        st.sgs.emplace(n.head[1], std::move(sg));
        st.record("ring " + n.head[1] + " = " + st.rings[n.head[1]]->describe() +
                  "  (stretched Gorenstein, e=" + std::to_string(e) + " s=" + std::to_string(s) +
                  ")");
      } else if (key == "deform") {
        if (n.head.size() != 2) n.error("expected: deform NAME { ... }");
        DeformationPair pair;
        std::string base = child_value(n, "base", "");
        if (!base.empty()) {
          pair = adjoin_variable(st.ring_of(n, base), child_value(n, "adjoin", "w"));
        } else {
          std::string total = child_value(n, "total", "");
          if (total.empty()) n.error("deform needs base+adjoin or total+x");
          pair = declare_deformation(st.ring_of(n, total), child_value(n, "x", "w"));
          st.rings[n.head[1] + ".base"] = pair.base;
        }
        st.rings[n.head[1] + ".total"] = pair.total;
        st.record("deform " + n.head[1] + ": R = " + pair.total->describe() + ", R/(x) = " +
                  pair.base->describe());
        st.pairs.erase(n.head[1]);
        st.pairs.emplace(n.head[1], std::move(pair));
      } else if (key == "module") {
        declare_module(st, n);
      } else if (key == "task") {
        run_task(st, n);
      } else {
        n.error("unknown declaration " + key);
      }
    }
  } catch (const EngineError& e) {
    st.record(std::string("error: ") + e.what());
    st.any_fail = true;
  }
  int rc = st.any_fail ? 1 : (st.any_inconclusive ? 2 : 0);
  st.record("# exit: " + std::to_string(rc));
  result.exit_code = rc;
  result.report = st.out.str();
  return result;
}

ScenarioResult run_scenario_file(const std::string& path, const ScenarioOptions& opts) {
  std::ifstream in(path);
  if (!in) {
    ScenarioResult r;
    r.exit_code = 1;
    r.report = "error: cannot open " + path + "\n";
    return r;
  }
  std::stringstream ss;
  ss << in.rdbuf();
  std::string name = path;
  auto slash = name.find_last_of('/');
  if (slash != std::string::npos) name = name.substr(slash + 1);
  return run_scenario_text(ss.str(), name, opts);
}

} // namespace fitres
