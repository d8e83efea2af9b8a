#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "terw/characters.hpp"
#include "terw/conjugacy.hpp"
#include "terw/error.hpp"
#include "terw/scheme.hpp"
#include "terw/wedderburn.hpp"

namespace terw::cli {

using nlohmann::json;

std::string_view to_string(Kind kind) noexcept {
  switch (kind) {
    case Kind::General: return "general";
    case Kind::Dihedral: return "dihedral";
    case Kind::Dicyclic: return "dicyclic";
    case Kind::G2: return "g2";
  }
  return "?";
}

std::optional<Kind> parse_kind(std::string_view text) {
  for (auto k : {Kind::General, Kind::Dihedral, Kind::Dicyclic, Kind::G2})
    if (to_string(k) == text) return k;
  return std::nullopt;
}

json to_json(const GroupSpec& spec) {
  json j;
  j["kind"] = std::string(to_string(spec.kind));
  if (spec.kind == Kind::G2) {
    j["n"] = spec.n;
    j["s"] = spec.s.empty() ? 0 : spec.s.front();
    j["t"] = spec.t;
    return j;
  }
  j["factors"] = json::array();
  for (auto [p, e] : spec.factors) j["factors"].push_back({p, e});
  if (spec.kind == Kind::General) j["s"] = spec.s;
  if (spec.kind != Kind::Dihedral) j["y"] = spec.y;
  return j;
}

namespace {

[[noreturn]] void bad_spec(const std::string& what) { throw Error(ErrorKind::InvalidSpec, what); }

template <typename T>
T field(const json& j, const char* name) {
  if (!j.contains(name)) bad_spec(std::string("missing field \"") + name + "\"");
  try {
    return j.at(name).get<T>();
  } catch (const json::exception&) {
    bad_spec(std::string("field \"") + name + "\" has the wrong type");
  }
}

}  // namespace

GroupSpec spec_from_json(const json& j) {
  if (!j.is_object()) bad_spec("spec must be a JSON object");
  GroupSpec spec;
  const auto kind = parse_kind(field<std::string>(j, "kind"));
  if (!kind) bad_spec("unknown kind \"" + j.at("kind").get<std::string>() + "\"");
  spec.kind = *kind;
  if (spec.kind == Kind::G2) {
    spec.n = field<std::int64_t>(j, "n");
    spec.s = {field<int>(j, "s")};
    spec.t = j.contains("t") ? field<std::int64_t>(j, "t") : 0;
    return spec;
  }
  for (const auto& f : field<std::vector<std::vector<int>>>(j, "factors")) {
    if (f.size() != 2) bad_spec("each factor must be a [p, e] pair");
    spec.factors.emplace_back(f[0], f[1]);
  }
  if (spec.kind == Kind::General) spec.s = field<std::vector<int>>(j, "s");
  if (spec.kind == Kind::General || spec.kind == Kind::Dicyclic) {
    if (j.contains("y"))
      spec.y = field<std::vector<int>>(j, "y");
    else if (spec.kind == Kind::Dicyclic)
      bad_spec("missing field \"y\"");
    else
      spec.y.assign(spec.factors.size(), 0);
  }
  return spec;
}

GroupSpec canonical(GroupSpec spec) {
  if (spec.kind == Kind::G2) return spec;
  const std::size_t r = spec.factors.size();
  std::vector<std::size_t> order(r);
  for (std::size_t i = 0; i < r; ++i) order[i] = i;
  std::stable_partition(order.begin(), order.end(),
                        [&](std::size_t i) { return spec.factors[i].first == 2; });
  auto permute = [&](auto& v) {
    if (v.size() != r) return;
    auto copy = v;
    for (std::size_t i = 0; i < r; ++i) v[i] = copy[order[i]];
  };
  permute(spec.factors);
  permute(spec.s);
  permute(spec.y);
  return spec;
}

D2Group build_group(const GroupSpec& raw, std::vector<std::string>* warnings) {
  const auto spec = canonical(raw);
  switch (spec.kind) {
    case Kind::Dihedral: return make_family(DihedralSpec{spec.factors}, warnings);
    case Kind::Dicyclic: return make_family(DicyclicSpec{spec.factors, spec.y}, warnings);
    case Kind::G2:
      if (spec.s.size() != 1) bad_spec("g2 takes a single multiplier s");
      return make_family(G2Spec{spec.n, spec.s.front(), spec.t}, warnings);
    case Kind::General: {
      auto A = make_abelian(spec.factors);
      auto f = make_involution(A, spec.s);
      if (spec.y.size() != A.rank())
        throw Error(ErrorKind::DimensionMismatch, "y must have one exponent per cyclic factor");
      AbElem y{spec.y};
      for (std::size_t i = 0; i < A.rank(); ++i)
        y.t[i] = ((y.t[i] % A.modulus(i)) + A.modulus(i)) % A.modulus(i);
      return make_d2(std::move(A), std::move(f), std::move(y));
    }
  }
  bad_spec("unknown kind");
}

std::size_t default_guard() {
  if (const char* env = std::getenv("TERW_GUARD")) {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v >= 6) return static_cast<std::size_t>(v);
  }
  return kMatrixGuard;
}

namespace {

// ---------------------------------------------------------------------------
// formatting

std::string format_complex(std::complex<double> z, int digits) {
  auto clean = [](double x) { return std::abs(x) < 1e-12 ? 0.0 : x; };
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.*g%+.*gi", digits, clean(z.real()), digits, clean(z.imag()));
  return buf;
}

std::string vec_string(const std::vector<int>& v, char sep = ',') {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string spec_summary(const GroupSpec& spec) {
  std::string out(to_string(spec.kind));
  if (spec.kind == Kind::G2)
    return out + " n=" + std::to_string(spec.n) + " s=" + vec_string(spec.s) + " t=" +
           std::to_string(spec.t);
  out += " factors=";
  for (std::size_t i = 0; i < spec.factors.size(); ++i) {
    if (i) out += ';';
    out += std::to_string(spec.factors[i].first) + "^" + std::to_string(spec.factors[i].second);
  }
  if (spec.kind == Kind::General) out += " s=" + vec_string(spec.s, ';');
  if (spec.kind != Kind::Dihedral) out += " y=" + vec_string(spec.y, ';');
  return out;
}

// Element names: a^k[b] for g2, a(t_1,...,t_r)[b] otherwise.
class Namer {
 public:
  Namer(const D2Group& G, Kind kind) : G_(G) {
    if (kind != Kind::G2) return;
    const auto& A = G.abelian();
    cyclic_.resize(static_cast<std::size_t>(A.order()));
    for (std::int64_t k = 0; k < A.order(); ++k) cyclic_[A.index_of(cyclic_to_crt(A, k))] = k;
  }

  std::string operator()(std::size_t index) const { return (*this)(G_.element_at(index)); }
  std::string operator()(const D2Elem& g) const {
    std::string out = cyclic_.empty()
                          ? "a(" + vec_string(g.a.t) + ")"
                          : "a^" + std::to_string(cyclic_[G_.abelian().index_of(g.a)]);
    return g.beta ? out + "b" : out;
  }

 private:
  const D2Group& G_;
  std::vector<std::int64_t> cyclic_;
};

struct Mismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Context {
  const RunConfig& config;
  GroupSpec spec;
  D2Group G;
  Namer name;
  std::string label;  // instance summary for messages

  Context(const RunConfig& c, const GroupSpec& s, D2Group g)
      : config(c), spec(canonical(s)), G(std::move(g)), name(G, spec.kind),
        label(spec_summary(spec)) {}
};

std::string render_json(json j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// info

std::string cmd_info(const Context& ctx) {
  const auto& G = ctx.G;
  const auto& A = G.abelian();
  const auto& fd = G.fixed();
  json j;
  j["spec"] = to_json(ctx.spec);
  j["order"] = G.order();
  j["n"] = G.n();
  j["d"] = G.d();
  j["d_i"] = fd.d_vec;
  j["n_i"] = fd.n_vec;
  j["moduli"] = json::array();
  for (std::size_t i = 0; i < A.rank(); ++i) j["moduli"].push_back(A.modulus(i));
  j["s_i"] = G.involution().s;
  j["y"] = G.y().t;
  j["lambda"] = A.lambda();
  j["mu"] = A.mu();
  j["fixed_subgroup_order"] = G.d();
  j["B_order"] = G.n() / G.d();
  switch (ctx.config.format) {
    case Format::Json: return render_json(j);
    case Format::Csv: {
      std::ostringstream os;
      os << "kind,order,n,d,lambda,mu,fixed_subgroup_order,B_order\n"
         << to_string(ctx.spec.kind) << ',' << G.order() << ',' << G.n() << ',' << G.d() << ','
         << A.lambda() << ',' << A.mu() << ',' << G.d() << ',' << G.n() / G.d() << '\n';
      return os.str();
    }
    case Format::Text: break;
  }
  std::ostringstream os;
  os << "group     " << ctx.label << "\n"
     << "|G|       " << G.order() << "\n"
     << "n = |A|   " << G.n() << "\n"
     << "moduli    " << j["moduli"].dump() << "\n"
     << "s_i       " << j["s_i"].dump() << "\n"
     << "y         " << j["y"].dump() << "\n"
     << "d_i       " << j["d_i"].dump() << "\n"
     << "n_i       " << j["n_i"].dump() << "\n"
     << "d = |A'|  " << G.d() << "\n"
     << "|B|       " << G.n() / G.d() << "\n"
     << "lambda    " << A.lambda() << "\n"
     << "mu        " << A.mu() << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// classes

std::string cmd_classes(const Context& ctx) {
  const auto cl = conjugacy_classes(ctx.G);
  if (ctx.config.oracle && !same_partition(cl, conjugacy_classes_bruteforce(ctx.G, kFormulaGuard)))
    throw Mismatch("closed-form classes differ from brute force for " + ctx.label);
  json arr = json::array();
  for (const auto& c : cl.classes) {
    json e;
    e["index"] = c.index;
    e["kind"] = std::string(to_string(c.kind));
    e["size"] = c.size();
    e["representative"] = ctx.name(c.rep);
    e["elements"] = json::array();
    for (auto x : c.elements) e["elements"].push_back(ctx.name(x));
    arr.push_back(e);
  }
  std::ostringstream os;
  switch (ctx.config.format) {
    case Format::Json:
      return render_json({{"spec", to_json(ctx.spec)},
                          {"counts",
                           {{"fixed", cl.num_fixed}, {"paired", cl.num_paired}, {"coset", cl.num_coset}}},
                          {"classes", arr}});
    case Format::Csv:
      os << "index,kind,size,representative\n";
      for (const auto& c : cl.classes)
        os << c.index << ',' << to_string(c.kind) << ',' << c.size() << ',' << ctx.name(c.rep)
           << '\n';
      return os.str();
    case Format::Text: break;
  }
  os << ctx.label << ": " << cl.size() << " classes (" << cl.num_fixed << " fixed, "
     << cl.num_paired << " paired, " << cl.num_coset << " coset)\n";
  for (const auto& c : cl.classes) {
    os << std::setw(4) << c.index << "  " << std::left << std::setw(7) << to_string(c.kind)
       << std::right << std::setw(5) << c.size() << "  {";
    for (std::size_t k = 0; k < c.elements.size(); ++k)
      os << (k ? ", " : "") << ctx.name(c.elements[k]);
    os << "}\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// chartable

std::string cmd_chartable(const Context& ctx) {
  const auto cl = conjugacy_classes(ctx.G);
  const auto T = character_table(ctx.G, cl);
  if (ctx.config.oracle) {
    try {
      verify_orthogonality(T);
    } catch (const Error& e) {
      throw Mismatch(std::string(e.what()) + " for " + ctx.label);
    }
  }
  std::ostringstream os;
  switch (ctx.config.format) {
    case Format::Json: {
      json j;
      j["spec"] = to_json(ctx.spec);
      j["root_order"] = T.root_order;
      j["classes"] = json::array();
      for (const auto& c : cl.classes)
        j["classes"].push_back({{"index", c.index},
                                {"kind", std::string(to_string(c.kind))},
                                {"size", c.size()},
                                {"representative", ctx.name(c.rep)}});
      j["characters"] = json::array();
      for (std::size_t r = 0; r < T.rows(); ++r) {
        json row;
        row["label"] = to_string(T.labels[r]);
        row["degree"] = T.degrees[r];
        row["values"] = json::array();
        for (std::size_t c = 0; c < T.cols(); ++c) {
          const auto& v = T.value(r, c);
          json terms = json::array();
          for (auto [k, coeff] : v.terms()) terms.push_back({k, coeff});
          const auto z = v.eval();
          row["values"].push_back({{"terms", terms}, {"value", {z.real(), z.imag()}}});
        }
        j["characters"].push_back(row);
      }
      return render_json(j);
    }
    case Format::Csv:
      os << "label,degree";
      for (const auto& c : cl.classes) os << ',' << csv_escape(ctx.name(c.rep));
      os << '\n';
      for (std::size_t r = 0; r < T.rows(); ++r) {
        os << csv_escape(to_string(T.labels[r])) << ',' << T.degrees[r];
        for (std::size_t c = 0; c < T.cols(); ++c) os << ',' << format_complex(T.value(r, c).eval(), 12);
        os << '\n';
      }
      return os.str();
    case Format::Text: break;
  }
  constexpr int w = 16;
  os << ctx.label << ": " << T.rows() << " x " << T.cols() << ", values in Q(zeta_"
     << T.root_order << ")\n";
  os << std::left << std::setw(18) << "" << std::right;
  for (const auto& c : cl.classes) os << std::setw(w) << ctx.name(c.rep);
  os << '\n' << std::left << std::setw(18) << "|class|" << std::right;
  for (const auto& c : cl.classes) os << std::setw(w) << c.size();
  os << '\n';
  for (std::size_t r = 0; r < T.rows(); ++r) {
    os << std::left << std::setw(18) << to_string(T.labels[r]) << std::right;
    for (std::size_t c = 0; c < T.cols(); ++c) {
      const auto v = T.value(r, c);
      const auto i = v.to_integer(1e-9);
      os << std::setw(w) << (i ? std::to_string(*i) : format_complex(v.eval(), 4));
    }
    os << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// dims

struct DimsReport {
  TerwilligerDims dims;
  std::optional<std::int64_t> dim_T0_span;
  std::optional<std::int64_t> dim_orbits;
  std::string sandwich;
  std::vector<std::string> disagreements;
};

DimsReport compute_dims(const D2Group& G, const ClassList& cl, const RunConfig& config) {
  DimsReport r;
  r.dims = is_triply_transitive(G, cl, config.guard);
  if (G.size() <= config.guard) {
    r.dim_T0_span = dim_T0_span(G, cl, config.guard);
    if (config.oracle) r.dim_orbits = dim_centralizer_orbits(cayley_table(G));
  }
  r.sandwich = check_sandwich(r.dims);
  const auto ref = r.dims.dim_formula;
  auto cmp = [&](const char* name, std::optional<std::int64_t> v) {
    if (v && *v != ref)
      r.disagreements.push_back(std::string(name) + " = " + std::to_string(*v) +
                                " but the closed form gives " + std::to_string(ref));
  };
  cmp("dim T0 (triples)", r.dims.dim_T0);
  cmp("dim T0 (span)", r.dim_T0_span);
  cmp("dim T (closure)", r.dims.dim_closure);
  cmp("dim T~ (centralizer scan)", r.dims.dim_centralizer);
  cmp("dim T~ (orbit count)", r.dim_orbits);
  return r;
}

json dims_json(const DimsReport& r) {
  auto opt = [](std::optional<std::int64_t> v) { return v ? json(*v) : json(nullptr); };
  return {{"dim_T0", r.dims.dim_T0},
          {"dim_T0_span", opt(r.dim_T0_span)},
          {"dim_closure", opt(r.dims.dim_closure)},
          {"dim_centralizer", r.dims.dim_centralizer},
          {"dim_centralizer_orbits", opt(r.dim_orbits)},
          {"dim_formula", r.dims.dim_formula},
          {"triply_transitive", r.dims.triply_transitive},
          {"sandwich_ok", r.sandwich.empty()}};
}

std::string cmd_dims(const Context& ctx) {
  const auto cl = conjugacy_classes(ctx.G);
  const auto r = compute_dims(ctx.G, cl, ctx.config);
  if (!r.sandwich.empty()) throw Mismatch(r.sandwich + " for " + ctx.label);
  if (!r.disagreements.empty()) throw Mismatch(r.disagreements.front() + " for " + ctx.label);

  auto opt = [](std::optional<std::int64_t> v) { return v ? std::to_string(*v) : std::string(); };
  std::ostringstream os;
  switch (ctx.config.format) {
    case Format::Json: {
      auto j = dims_json(r);
      j["spec"] = to_json(ctx.spec);
      return render_json(j);
    }
    case Format::Csv:
      os << "n,d,dim_T0,dim_T0_span,dim_closure,dim_centralizer,dim_formula,triply_transitive\n"
         << ctx.G.n() << ',' << ctx.G.d() << ',' << r.dims.dim_T0 << ',' << opt(r.dim_T0_span)
         << ',' << opt(r.dims.dim_closure) << ',' << r.dims.dim_centralizer << ','
         << r.dims.dim_formula << ',' << (r.dims.triply_transitive ? "true" : "false") << '\n';
      return os.str();
    case Format::Text: break;
  }
  auto line = [&](const char* name, const std::string& v) {
    os << std::left << std::setw(28) << name << (v.empty() ? "skipped (above guard)" : v) << '\n';
  };
  os << ctx.label << "\n";
  line("dim T0 (triples)", std::to_string(r.dims.dim_T0));
  line("dim T0 (span)", opt(r.dim_T0_span));
  line("dim T (closure)", opt(r.dims.dim_closure));
  line("dim T~ (centralizer scan)", std::to_string(r.dims.dim_centralizer));
  if (ctx.config.oracle) line("dim T~ (orbit count)", opt(r.dim_orbits));
  line("(3nd + n^2 + 4d^2) / 2", std::to_string(r.dims.dim_formula));
  line("triply transitive", r.dims.triply_transitive ? "yes" : "no");
  return os.str();
}

// ---------------------------------------------------------------------------
// wedderburn

json wedderburn_json(const WedderburnReport& rep) {
  json rows = json::array();
  for (std::size_t j = 0; j < rep.labels.size(); ++j)
    rows.push_back({{"label", to_string(rep.labels[j])},
                    {"degree", rep.degrees[j]},
                    {"multiplicity", rep.closed_form.values[j]},
                    {"char_sum", rep.char_sum.values[j]},
                    {"inner_product", rep.inner_product.values[j]},
                    {"agree", static_cast<bool>(rep.agree[j])}});
  return {{"characters", rows},
          {"blocks", rep.blocks},
          {"sum_squares", rep.sum_squares},
          {"dim_centralizer", rep.dim_centralizer},
          {"sum_weighted", rep.sum_weighted},
          {"group_order", rep.group_order},
          {"sum_squares_ok", rep.sum_squares == rep.dim_centralizer},
          {"sum_weighted_ok", rep.sum_weighted == rep.group_order}};
}

std::string cmd_wedderburn(const Context& ctx) {
  const auto cl = conjugacy_classes(ctx.G);
  const ClassAlgebra alg(ctx.G, cl);
  const auto T = character_table(ctx.G, cl);
  const auto rep = wedderburn_report(alg, ctx.G, T);
  try {
    require_consistent(rep);
    if (ctx.config.oracle && ctx.G.size() <= ctx.config.guard)
      verify_central_idempotents(alg, T, rep.closed_form, ctx.config.guard);
  } catch (const Error& e) {
    throw Mismatch(std::string(e.what()) + " for " + ctx.label);
  }
  std::ostringstream os;
  switch (ctx.config.format) {
    case Format::Json: {
      auto j = wedderburn_json(rep);
      j["spec"] = to_json(ctx.spec);
      return render_json(j);
    }
    case Format::Csv:
      os << "label,degree,multiplicity,char_sum,inner_product,agree\n";
      for (std::size_t j = 0; j < rep.labels.size(); ++j)
        os << csv_escape(to_string(rep.labels[j])) << ',' << rep.degrees[j] << ','
           << rep.closed_form.values[j] << ',' << rep.char_sum.values[j] << ','
           << rep.inner_product.values[j] << ',' << (rep.agree[j] ? "true" : "false") << '\n';
      return os.str();
    case Format::Text: break;
  }
  os << ctx.label << "\n"
     << std::left << std::setw(18) << "label" << std::right << std::setw(5) << "deg" << std::setw(8)
     << "mult" << std::setw(10) << "char sum" << std::setw(8) << "<psi,x>" << '\n';
  for (std::size_t j = 0; j < rep.labels.size(); ++j)
    os << std::left << std::setw(18) << to_string(rep.labels[j]) << std::right << std::setw(5)
       << rep.degrees[j] << std::setw(8) << rep.closed_form.values[j] << std::setw(10)
       << rep.char_sum.values[j] << std::setw(8) << rep.inner_product.values[j] << '\n';
  os << "blocks       ";
  for (std::size_t k = 0; k < rep.blocks.size(); ++k)
    os << (k ? " + " : "") << "M_" << rep.blocks[k];
  os << "\nsum d^2      " << rep.sum_squares << " (dim T~ = " << rep.dim_centralizer << ")\n"
     << "sum d deg    " << rep.sum_weighted << " (|G| = " << rep.group_order << ")\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// matrices

std::string cmd_matrices(const Context& ctx) {
  const auto cl = conjugacy_classes(ctx.G);
  const auto N = adjacency_matrices(ctx.G, cl, ctx.config.guard);
  const auto E = dual_idempotents(ctx.G, cl, ctx.config.guard);
  auto to_rows = [](const IntMatrix& m) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      json row = json::array();
      for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
      rows.push_back(row);
    }
    return rows;
  };
  std::ostringstream os;
  if (ctx.config.format == Format::Json) {
    json j;
    j["spec"] = to_json(ctx.spec);
    j["elements"] = json::array();
    for (std::size_t g = 0; g < ctx.G.size(); ++g) j["elements"].push_back(ctx.name(g));
    j["adjacency"] = json::array();
    j["dual_idempotents"] = json::array();
    for (std::size_t i = 0; i < cl.size(); ++i) {
      j["adjacency"].push_back(to_rows(N[i]));
      j["dual_idempotents"].push_back(to_rows(E[i]));
    }
    return render_json(j);
  }
  if (ctx.config.format == Format::Csv) {
    os << "matrix,class,row,col\n";
    for (std::size_t i = 0; i < cl.size(); ++i)
      for (const auto* m : {&N[i], &E[i]})
        for (Eigen::Index r = 0; r < m->rows(); ++r)
          for (Eigen::Index c = 0; c < m->cols(); ++c)
            if ((*m)(r, c)) os << (m == &N[i] ? "N" : "E") << ',' << i << ',' << r << ',' << c << '\n';
    return os.str();
  }
  os << ctx.label << ": elements in order";
  for (std::size_t g = 0; g < ctx.G.size(); ++g) os << ' ' << ctx.name(g);
  os << '\n';
  for (std::size_t i = 0; i < cl.size(); ++i) {
    os << "\nN_" << i << " (class of " << ctx.name(cl[i].rep) << ")\n";
    for (Eigen::Index r = 0; r < N[i].rows(); ++r) {
      for (Eigen::Index c = 0; c < N[i].cols(); ++c) os << (N[i](r, c) ? '1' : '.');
      os << '\n';
    }
    os << "E*_" << i << " diagonal ";
    for (Eigen::Index r = 0; r < E[i].rows(); ++r) os << E[i](r, r);
    os << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// verify

struct Check {
  std::string name;
  std::string status;  // pass, fail, skipped
  std::string detail;
};

std::string cmd_verify(const Context& ctx) {
  const auto& G = ctx.G;
  const auto guard = ctx.config.guard;
  const bool matrices = G.size() <= guard;
  std::vector<Check> checks;
  auto record = [&](const std::string& name, bool enabled, const std::function<std::string()>& fn) {
    if (!enabled) {
      checks.push_back({name, "skipped", "|G| = " + std::to_string(G.size()) + " above guard " +
                                              std::to_string(guard)});
      return;
    }
    try {
      const auto msg = fn();
      checks.push_back({name, msg.empty() ? "pass" : "fail", msg});
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::GuardExceeded) throw;
      checks.push_back({name, "fail", e.what()});
    }
  };

  const auto cl = conjugacy_classes(G);
  const ClassAlgebra alg(G, cl);
  const auto T = character_table(G, cl);

  record("classes match brute force", true, [&] {
    return same_partition(cl, conjugacy_classes_bruteforce(G, kFormulaGuard))
               ? std::string()
               : std::string("partitions differ");
  });
  record("paired class products", true, [&] { return check_paired_products(alg); });
  record("coset class products partition A", true, [&] { return check_coset_partition(alg); });
  record("character orthogonality", true, [&] {
    verify_orthogonality(T);
    return std::string();
  });
  record("degree identity", true, [&] {
    std::int64_t sum = 0;
    for (int d : T.degrees) sum += d * d;
    return sum == G.order() && T.rows() == cl.size()
               ? std::string()
               : "sum deg^2 = " + std::to_string(sum) + ", |G| = " + std::to_string(G.order());
  });
  record("two-dimensional rows vanish on cosets", true, [&] {
    for (std::size_t r = 0; r < T.rows(); ++r)
      for (std::size_t c = 0; c < cl.size(); ++c)
        if (T.degrees[r] == 2 && cl[c].kind == ClassKind::Coset && !T.value(r, c).is_zero())
          return to_string(T.labels[r]) + " at class " + std::to_string(c);
    return std::string();
  });
  record("scheme axioms", matrices, [&] {
    verify_scheme_axioms(alg, adjacency_matrices(G, cl, guard));
    return std::string();
  });

  RunConfig forced = ctx.config;
  forced.oracle = true;
  DimsReport dims;
  record("sandwich dim T0 <= dim T <= dim T~", true, [&] {
    dims = compute_dims(G, cl, forced);
    return dims.sandwich;
  });
  record("dimension paths agree with the closed form", true, [&] {
    std::string out;
    for (const auto& d : dims.disagreements) out += (out.empty() ? "" : "; ") + d;
    return out;
  });
  record("triply transitive", true,
         [&] { return dims.dims.triply_transitive ? std::string() : std::string("dim T0 != dim T~"); });

  WedderburnReport wrep;
  record("multiplicities agree three ways", true, [&] {
    wrep = wedderburn_report(alg, G, T);
    require_consistent(wrep);
    return std::string();
  });
  record("central idempotents", matrices, [&] {
    verify_central_idempotents(alg, T, multiplicities_char_sum(T), guard);
    return std::string();
  });

  bool ok = true;
  for (const auto& c : checks) ok = ok && c.status != "fail";

  std::ostringstream os;
  switch (ctx.config.format) {
    case Format::Json: {
      json j;
      j["spec"] = to_json(ctx.spec);
      j["status"] = ok ? "pass" : "mismatch";
      j["checks"] = json::array();
      for (const auto& c : checks)
        j["checks"].push_back({{"name", c.name}, {"status", c.status}, {"detail", c.detail}});
      j["dims"] = dims_json(dims);
      if (!wrep.labels.empty()) j["wedderburn"] = wedderburn_json(wrep);
      os << render_json(j);
      break;
    }
    case Format::Csv:
      os << "check,status,detail\n";
      for (const auto& c : checks)
        os << csv_escape(c.name) << ',' << c.status << ',' << csv_escape(c.detail) << '\n';
      break;
    case Format::Text:
      os << ctx.label << "\n";
      for (const auto& c : checks)
        os << (c.status == "pass" ? "PASS " : c.status == "fail" ? "FAIL " : "SKIP ") << c.name
           << (c.detail.empty() ? "" : ": " + c.detail) << '\n';
      break;
  }
  if (!ok) {
    std::string first;
    for (const auto& c : checks)
      if (c.status == "fail") {
        first = c.name + ": " + c.detail;
        break;
      }
    throw Mismatch(os.str() + "\x1f" + first + " for " + ctx.label);
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// sweep

std::vector<GroupSpec> sweep_instances(Kind kind, const SweepRange& range) {
  std::vector<GroupSpec> out;
  for (std::int64_t n = std::max<std::int64_t>(range.from, 3); n <= range.to; ++n) {
    if (kind == Kind::G2) {
      for (std::int64_t s = 2; s < n; ++s)
        for (std::int64_t t = 0; t < n; ++t)
          if (g2_params_valid(n, s, t)) out.push_back({Kind::G2, {}, {static_cast<int>(s)}, {}, n, t});
      continue;
    }
    std::vector<std::vector<std::pair<int, int>>> groups;
    if (range.all_abelian || kind == Kind::General)
      groups = abelian_groups_of_order(n);
    else
      groups.push_back(factorize(n));
    for (const auto& factors : groups) {
      const auto A = make_abelian(factors);
      if (kind == Kind::Dihedral) {
        bool exponent_two = true;
        for (const auto& c : A.factors()) exponent_two = exponent_two && c.m == 2;
        if (!exponent_two) out.push_back({Kind::Dihedral, factors, {}, {}, 0, 0});
      } else if (kind == Kind::Dicyclic) {
        if (n % 2 != 0) continue;
        for (const auto& y : involutions_of(A)) out.push_back({Kind::Dicyclic, factors, {}, y.t, 0, 0});
      } else {
        for (const auto& cand : diagonal_involutions(A)) {
          Involution f;
          try {
            f = make_involution(A, cand.s);
          } catch (const Error&) {
            continue;
          }
          const auto fd = fixed_data(A, f);
          for (const auto& y : A.elements())
            if (fd.is_fixed(y)) out.push_back({Kind::General, factors, f.s, y.t, 0, 0});
        }
      }
    }
  }
  return out;
}

std::string cmd_sweep(const RunConfig& config, const GroupSpec& family, int& exit_code,
                      std::vector<std::string>& failures) {
  const auto instances = sweep_instances(family.kind, config.sweep);
  json rows = json::array();
  std::ostringstream os;
  const bool json_out = config.format == Format::Json;
  if (!json_out)
    os << "kind,spec,n,d,order,dim_T0,dim_formula,dim_centralizer,dim_closure,triply_transitive,"
          "multiplicities_agree\n";
  for (const auto& spec : instances) {
    const auto G = build_group(spec);
    const auto cl = conjugacy_classes(G);
    const auto r = compute_dims(G, cl, config);
    const auto w = wedderburn_report(G);
    const bool dims_ok = r.sandwich.empty() && r.disagreements.empty();
    const bool mult_ok = w.consistent();
    const auto summary = spec_summary(spec);
    if (!dims_ok || !r.dims.triply_transitive || !mult_ok) {
      exit_code = kMismatch;
      failures.push_back(summary + ": " +
                         (!r.sandwich.empty()         ? r.sandwich
                          : !r.disagreements.empty()  ? r.disagreements.front()
                          : !r.dims.triply_transitive ? std::string("not triply transitive")
                                                      : std::string("multiplicities disagree")));
    }
    if (json_out) {
      auto j = dims_json(r);
      j["spec"] = to_json(spec);
      j["n"] = G.n();
      j["d"] = G.d();
      j["order"] = G.order();
      j["multiplicities_agree"] = mult_ok;
      rows.push_back(j);
      continue;
    }
    os << to_string(spec.kind) << ',' << csv_escape(summary.substr(summary.find(' ') + 1)) << ','
       << G.n() << ',' << G.d() << ',' << G.order() << ',' << r.dims.dim_T0 << ','
       << r.dims.dim_formula << ',' << r.dims.dim_centralizer << ','
       << (r.dims.dim_closure ? std::to_string(*r.dims.dim_closure) : std::string()) << ','
       << (dims_ok && r.dims.triply_transitive ? "true" : "false") << ','
       << (mult_ok ? "true" : "false") << '\n';
  }
  return json_out ? render_json(rows) : os.str();
}

}  // namespace

RunResult run(const RunConfig& config, const GroupSpec& spec) {
  RunResult res;
  try {
    if (config.guard < 6) bad_spec("guard must be at least 6");
    if (config.command == "sweep") {
      std::vector<std::string> failures;
      res.output = cmd_sweep(config, spec, res.exit_code, failures);
      if (!failures.empty()) res.error = "mismatch: " + failures.front();
      return res;
    }
    auto G = build_group(spec, &res.warnings);
    const Context ctx(config, spec, std::move(G));
    const auto& cmd = config.command;
    if (cmd == "info")
      res.output = cmd_info(ctx);
    else if (cmd == "classes")
      res.output = cmd_classes(ctx);
    else if (cmd == "chartable")
      res.output = cmd_chartable(ctx);
    else if (cmd == "dims")
      res.output = cmd_dims(ctx);
    else if (cmd == "wedderburn")
      res.output = cmd_wedderburn(ctx);
    else if (cmd == "matrices")
      res.output = cmd_matrices(ctx);
    else if (cmd == "verify")
      res.output = cmd_verify(ctx);
    else
      bad_spec("unknown command \"" + cmd + "\"");
  } catch (const Mismatch& m) {
    res.exit_code = kMismatch;
    std::string what = m.what();
    const auto sep = what.find('\x1f');
    if (sep != std::string::npos) {
      res.output = what.substr(0, sep);
      what = what.substr(sep + 1);
    }
    res.error = "mismatch: " + what;
  } catch (const Error& e) {
    if (is_spec_error(e.kind()))
      res.exit_code = kInvalidSpec;
    else if (e.kind() == ErrorKind::GuardExceeded || e.kind() == ErrorKind::ArithmeticOverflow)
      res.exit_code = kGuardExceeded;
    else
      res.exit_code = kMismatch;
    res.error = e.what();
  }
  return res;
}

namespace {

std::vector<std::pair<int, int>> parse_factors(const std::string& text) {
  if (!text.empty() && text.front() == '[') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception&) {
      bad_spec("--factors is not valid JSON");
    }
    return spec_from_json({{"kind", "dihedral"}, {"factors", j}}).factors;
  }
  // 2^2,3^1 or 2^2x3
  std::vector<std::pair<int, int>> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    const auto caret = item.find('^');
    try {
      if (caret == std::string::npos)
        out.emplace_back(std::stoi(item), 1);
      else
        out.emplace_back(std::stoi(item.substr(0, caret)), std::stoi(item.substr(caret + 1)));
    } catch (const std::exception&) {
      bad_spec("cannot parse factor \"" + item + "\"");
    }
  }
  return out;
}

std::vector<int> parse_ints(const std::string& text) {
  std::string body = text;
  if (!body.empty() && body.front() == '[') body = body.substr(1, body.size() - 2);
  std::vector<int> out;
  std::string item;
  std::istringstream in(body);
  while (std::getline(in, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      bad_spec("cannot parse integer \"" + item + "\"");
    }
  }
  return out;
}

}  // namespace

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"terw: conjugacy schemes, Terwilliger algebras and Wedderburn blocks of groups "
               "with an abelian subgroup of index 2"};
  app.require_subcommand(1);

  std::string spec_file, kind, factors, s, y, format = "text", out_file;
  std::optional<std::int64_t> n, t;
  std::optional<std::size_t> guard;
  bool oracle = false;
  SweepRange range;

  app.add_option("--spec", spec_file, "JSON file holding a group spec")->check(CLI::ExistingFile);
  app.add_option("--kind", kind, "general | dihedral | dicyclic | g2");
  app.add_option("--factors", factors, "cyclic factors, e.g. 2^2,3 or [[2,2],[3,1]]");
  app.add_option("--s", s, "automorphism exponents (general) or the multiplier (g2)");
  app.add_option("--y", y, "exponents of y = b^2");
  app.add_option("--n", n, "order of the cyclic subgroup (g2)");
  app.add_option("--t", t, "b^2 = a^t (g2)");
  app.add_option("--format", format, "text | json | csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_flag("--oracle", oracle, "run brute-force cross-checks");
  app.add_option("--guard", guard, "largest |G| for matrix paths (default 64 or TERW_GUARD)");
  app.add_option("--out", out_file, "write the report to a file");

  const std::vector<std::pair<const char*, const char*>> commands{
      {"info", "group parameters"},
      {"classes", "conjugacy classes"},
      {"chartable", "character table"},
      {"dims", "Terwilliger algebra dimensions"},
      {"wedderburn", "block multiplicities"},
      {"matrices", "adjacency matrices and dual idempotents"},
      {"verify", "every check with oracles on"},
      {"sweep", "iterate a family over n, one CSV row per instance"}};
  std::vector<CLI::App*> subs;
  for (auto [name, help] : commands) subs.push_back(app.add_subcommand(name, help)->fallthrough());
  subs.back()->add_option("--from", range.from, "smallest n");
  subs.back()->add_option("--to", range.to, "largest n");
  subs.back()->add_flag("--all-abelian", range.all_abelian, "every abelian A of order n");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidSpec;
  }

  RunConfig config;
  for (auto* sub : subs)
    if (sub->parsed()) config.command = sub->get_name();
  config.format = format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Text;
  config.oracle = oracle || config.command == "verify";
  config.guard = guard.value_or(default_guard());
  config.sweep = range;

  GroupSpec spec;
  try {
    if (!spec_file.empty()) {
      std::ifstream in(spec_file);
      json j;
      try {
        j = json::parse(in);
      } catch (const json::exception& e) {
        bad_spec(std::string("cannot parse ") + spec_file + ": " + e.what());
      }
      spec = spec_from_json(j);
    } else if (config.command == "sweep") {
      spec.kind = Kind::Dihedral;
    }
    if (!kind.empty()) {
      const auto k = parse_kind(kind);
      if (!k) bad_spec("unknown kind \"" + kind + "\"");
      spec.kind = *k;
    } else if (spec_file.empty() && config.command != "sweep") {
      bad_spec("give --spec or --kind");
    }
    if (!factors.empty()) spec.factors = parse_factors(factors);
    if (!s.empty()) spec.s = parse_ints(s);
    if (!y.empty()) spec.y = parse_ints(y);
    if (n) spec.n = *n;
    if (t) spec.t = *t;
    if (spec.kind == Kind::General && spec.y.empty()) spec.y.assign(spec.factors.size(), 0);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidSpec;
  }

  const auto res = run(config, spec);
  for (const auto& w : res.warnings) err << "warning: " << w << "\n";
  if (!out_file.empty()) {
    std::ofstream file(out_file);
    if (!file) {
      err << "error: cannot write " << out_file << "\n";
      return kInvalidSpec;
    }
    file << res.output;
  } else {
    out << res.output;
  }
  if (!res.error.empty()) err << "error: " << res.error << "\n";
  return res.exit_code;
}

}  // namespace terw::cli
