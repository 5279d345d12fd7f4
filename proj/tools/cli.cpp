#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <limits>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "bott/classify.hpp"
#include "bott/errors.hpp"
#include "bott/oracle.hpp"

namespace bott::cli {

using nlohmann::json;

namespace {

// ---------------------------------------------------------------- job input

struct Job {
  GeneralizedCartanMatrix gcm;
  Word word;
  BottMatrix m;
  Document root_system;
};

const std::set<std::string> kJobKeys = {"command", "family", "rank", "cartan", "word",
                                        "divisor", "walls",  "boundary", "b"};

Int as_int(const json& v, const std::string& what) {
  if (v.is_number_unsigned()) {
    if (v.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<Int>::max()))
      throw OverflowError(what + " is out of range");
    return static_cast<Int>(v.get<std::uint64_t>());
  }
  if (v.is_number_integer()) return v.get<Int>();
  throw InputError(what + " must be an integer");
}

int as_small_int(const json& v, const std::string& what) {
  const Int x = as_int(v, what);
  if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max())
    throw InputError(what + " is out of range");
  return static_cast<int>(x);
}

Rational as_rational(const json& v, const std::string& what) {
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  if (v.is_number_integer()) return Rational(as_int(v, what));
  throw InputError(what + " must be an integer or a \"p/q\" string");
}

const json& require(const json& job, const char* key) {
  auto it = job.find(key);
  if (it == job.end()) throw InputError(std::string("job is missing \"") + key + "\"");
  return *it;
}

const json& array_of(const json& v, const std::string& what) {
  if (!v.is_array()) throw InputError(what + " must be a list");
  return v;
}

Job parse_job(const json& job) {
  if (!job.is_object()) throw InputError("job must be a JSON object");
  for (const auto& [key, _] : job.items())
    if (!kJobKeys.contains(key)) throw InputError("unknown job key \"" + key + "\"");

  std::optional<GeneralizedCartanMatrix> gcm;
  Document root_system;
  if (job.contains("cartan")) {
    if (job.contains("family") || job.contains("rank"))
      throw InputError("give either \"cartan\" or \"family\"/\"rank\", not both");
    std::vector<std::vector<Int>> rows;
    for (const json& row : array_of(job["cartan"], "cartan")) {
      auto& out = rows.emplace_back();
      for (const json& x : array_of(row, "cartan row")) out.push_back(as_int(x, "cartan entry"));
    }
    gcm = GeneralizedCartanMatrix::from_rows(rows);
    root_system["cartan"] = rows;
  } else {
    const json& fam = require(job, "family");
    if (!fam.is_string()) throw InputError("family must be a string");
    const CartanFamily family = parse_family(fam.get<std::string>());
    int rank = 2;
    if (job.contains("rank"))
      rank = as_small_int(job["rank"], "rank");
    else if (family != CartanFamily::G2)
      throw InputError("job is missing \"rank\"");
    gcm = builtin_cartan(family, rank);
    root_system["family"] = std::string(family_name(family));
    root_system["rank"] = rank;
  }

  std::vector<int> letters;
  for (const json& x : array_of(require(job, "word"), "word")) letters.push_back(as_small_int(x, "word letter"));
  Word word(*gcm, std::move(letters));
  BottMatrix m = bott_matrix(*gcm, word);
  return {*gcm, std::move(word), std::move(m), std::move(root_system)};
}

std::optional<ToricDivisor> parse_divisor(const json& job, int length) {
  auto it = job.find("divisor");
  if (it == job.end()) return std::nullopt;
  if (!it->is_object()) throw InputError("divisor must be an object mapping ray labels to coefficients");
  ToricDivisor d;
  for (const auto& [label, value] : it->items())
    d.coeffs[RayId::parse(label, length)] = as_rational(value, "divisor coefficient of " + label);
  return d;
}

ToricDivisor require_divisor(const json& job, int length) {
  auto d = parse_divisor(job, length);
  if (!d) throw InputError("this command needs a \"divisor\"");
  return *d;
}

std::vector<Wall> parse_walls(const json& job, int length) {
  auto it = job.find("walls");
  if (it == job.end()) return {};
  if (it->is_string()) {
    if (it->get<std::string>() != "all") throw InputError("walls must be a list of ray-label lists or \"all\"");
    if (length > kMaxOracleLength)
      throw InputError("\"walls\": \"all\" needs word length <= " + std::to_string(kMaxOracleLength));
    return enumerate_walls(length);
  }
  std::vector<Wall> walls;
  for (const json& w : array_of(*it, "walls")) {
    std::vector<RayId> rays;
    for (const json& label : array_of(w, "wall")) {
      if (!label.is_string()) throw InputError("ray labels must be strings like \"3+\"");
      rays.push_back(RayId::parse(label.get<std::string>(), length));
    }
    walls.push_back(Wall::from_rays(length, std::move(rays)));
  }
  return walls;
}

// ---------------------------------------------------------------- output helpers

Document rational_json(const Rational& q) {
  if (q.is_integer()) return q.num();
  return q.str();
}

Document rationals_json(const std::vector<Rational>& qs) {
  Document out = Document::array();
  for (const Rational& q : qs) out.push_back(rational_json(q));
  return out;
}

Document rays_json(const RayCoefficients& coeffs) {
  Document out = Document::object();
  for (const auto& [ray, c] : coeffs) out[ray.label()] = c;
  return out;
}

Document labels_json(const std::vector<RayId>& rays) {
  Document out = Document::array();
  for (const RayId& r : rays) out.push_back(r.label());
  return out;
}

Document divisor_json(const ToricDivisor& d) {
  Document out = Document::object();
  for (const auto& [ray, c] : d.coeffs)
    if (c.sign() != 0) out[ray.label()] = rational_json(c);
  return out;
}

Document matrix_json(const IntMatrix& m) {
  Document out = Document::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(m.row(r));
  return out;
}

Document condition_json(const ConditionResult& c) {
  Document failures = Document::array();
  for (const auto& f : c.failures) failures.push_back({{"position", f.position}, {"clause", f.clause}});
  return {{"holds", c.holds}, {"failures", failures}};
}

Document certificate_json(const SmoothnessCertificate& c) {
  return {{"unimodular", c.unimodular}, {"method", c.method}, {"cones_certified", c.cones_certified}};
}

void agree_or_throw(bool ok, const std::string& what) {
  if (!ok) throw ConsistencyError("oracle disagrees with the fast path: " + what);
}

// Primitive relation located by brute force over all maximal cones.
RayCoefficients exhaustive_gamma(const BottMatrix& m, int i) {
  LatticePoint v = ray_vector(m, RayId::plus(i));
  const LatticePoint w = ray_vector(m, RayId::minus(i));
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = checked_add(v[k], w[k]);
  return locate_point_exhaustive(m, v).coeffs;
}

void check_primitive_relations(const BottMatrix& m) {
  for (int i = 1; i <= m.length(); ++i)
    agree_or_throw(exhaustive_gamma(m, i) == primitive_relation(m, i).gamma_rays,
                   "primitive relation " + std::to_string(i));
}

// ---------------------------------------------------------------- commands

Document cmd_fan(const Job& job, const json&, bool oracle) {
  const int r = job.m.length();
  Document rays = Document::array();
  for (int i = 1; i <= r; ++i)
    for (Sign s : {Sign::plus, Sign::minus}) {
      const RayId ray{i, s};
      rays.push_back({{"label", ray.label()}, {"vector", ray_vector(job.m, ray)}});
    }
  Document doc;
  doc["rays"] = rays;
  doc["maximal_cones"] = maximal_cone_count(r);
  doc["smoothness"] = certificate_json(certify_smoothness(job.m, false));
  if (oracle) {
    const auto cert = certify_smoothness(job.m, true);
    agree_or_throw(cert.unimodular, "a maximal cone is not unimodular");
    doc["oracle"] = {{"smoothness", certificate_json(cert)}, {"agrees", true}};
  }
  return doc;
}

Document cmd_matrix(const Job& job, const json&, bool oracle) {
  Document doc;
  doc["cartan"] = job.gcm.rows();
  doc["bott_matrix"] = matrix_json(job.m.entries());
  if (oracle) {
    const int r = job.m.length();
    for (int i = 1; i <= r; ++i)
      for (int j = 1; j <= r; ++j)
        agree_or_throw(job.m.beta(i, j) == pairing(job.gcm, job.word[i], job.word[j]), "Bott matrix entry");
    doc["oracle"] = {{"agrees", true}};
  }
  return doc;
}

Document cmd_classify(const Job& job, const json&, bool oracle) {
  const ClassificationReport rep = consistency_report(job.gcm, job.word);
  Document doc;
  doc["condition_I"] = condition_json(rep.condition_I);
  doc["condition_II"] = condition_json(rep.condition_II);
  doc["fano"] = rep.fano;
  doc["weak_fano"] = rep.weak_fano;
  doc["d_values"] = rationals_json(rep.d_values);
  doc["mori_rays"] = rep.mori_rays;
  Document disc = Document::array();
  for (const auto& d : rep.discrepancies)
    disc.push_back({{"claim", d.claim}, {"observed", d.observed}, {"source", d.source}});
  doc["discrepancies"] = disc;
  doc["notes"] = rep.notes;
  if (oracle) {
    check_primitive_relations(job.m);
    const ToricDivisor k = ToricDivisor::anticanonical(job.m.length());
    const bool fano = oracle::positive_on_all_walls(job.m, k, true);
    const bool weak = oracle::positive_on_all_walls(job.m, k, false);
    agree_or_throw(fano == rep.fano, "Fano status");
    agree_or_throw(weak == rep.weak_fano, "weak Fano status");
    doc["oracle"] = {{"fano", fano}, {"weak_fano", weak}, {"walls_checked", enumerate_walls(job.m.length()).size()},
                     {"agrees", true}};
  }
  return doc;
}

Document cmd_positivity(const Job& job, const json& raw, bool oracle, bool strict) {
  const ToricDivisor d = require_divisor(raw, job.m.length());
  Document doc;
  doc["divisor"] = divisor_json(d);
  doc["d_values"] = rationals_json(d_values(job.m, d));
  const bool ample = is_ample(job.m, d);
  const bool nef = is_nef(job.m, d);
  doc["ample"] = ample;
  doc["nef"] = nef;
  doc["verdict"] = strict ? ample : nef;
  if (oracle) {
    const bool wall_ample = oracle::positive_on_all_walls(job.m, d, true);
    const bool wall_nef = oracle::positive_on_all_walls(job.m, d, false);
    agree_or_throw(wall_ample == ample && wall_nef == nef, "wall positivity");
    doc["oracle"] = {{"ample", wall_ample}, {"nef", wall_nef}, {"agrees", true}};
  }
  return doc;
}

Document cmd_mori(const Job& job, const json&, bool oracle) {
  const BottMatrix& m = job.m;
  const auto basis = mori_cone_basis(m);
  Document sets = Document::array();
  Document classes = Document::array();
  Document degrees = Document::array();
  Document mori = Document::array();
  for (int i = 1; i <= m.length(); ++i) {
    const MoriIndexSet s = mori_index_set(m, i);
    Document trace = Document::array();
    for (const ATerm& t : s.trace) trace.push_back({{"k", t.k}, {"j", t.j}, {"value", t.value}});
    sets.push_back({{"position", i}, {"indices", s.indices}, {"trace", trace}});
    classes.push_back({{"position", i},
                       {"wall", labels_json(mori_wall(m, s).rays())},
                       {"intersections", rays_json(basis[i - 1].intersections)}});
    degrees.push_back(basis[i - 1].canonical_degree());
    mori.push_back(is_mori_ray(m, i));
  }
  Document doc;
  doc["index_sets"] = sets;
  doc["classes"] = classes;
  doc["canonical_degrees"] = degrees;
  doc["mori_rays"] = mori;
  if (oracle) {
    check_primitive_relations(m);
    for (int i = 1; i <= m.length(); ++i)
      agree_or_throw(oracle::wall_relation_generic(m, mori_wall(m, mori_index_set(m, i))) == basis[i - 1],
                     "wall relation of r(P_" + std::to_string(i) + ")");
    doc["oracle"] = {{"agrees", true}};
  }
  return doc;
}

Document cmd_intersect(const Job& job, const json& raw, bool oracle) {
  const BottMatrix& m = job.m;
  const auto divisor = parse_divisor(raw, m.length());
  const auto walls = parse_walls(raw, m.length());
  const auto describe = [&](const Wall& w, const CurveClass& c) {
    Document e;
    e["wall"] = labels_json(w.rays());
    e["missing_position"] = w.missing_position();
    e["intersections"] = rays_json(c.intersections);
    e["canonical_degree"] = c.canonical_degree();
    if (divisor) e["divisor_degree"] = rational_json(intersect(*divisor, c));
    return e;
  };

  Document lines = Document::array();
  for (int j = 1; j <= m.length(); ++j) {
    const SchubertLine l = schubert_line(m, j);
    Document e = describe(l.wall, l.curve);
    e["closed_form"] = schubert_canonical_degree_closed_form(m, j);
    lines.push_back(e);
  }
  Document listed = Document::array();
  for (const Wall& w : walls) {
    const CurveClass c = wall_relation(m, w);
    Document e = describe(w, c);
    e["in_basis"] = curve_in_basis(m, w);
    listed.push_back(e);
  }
  Document doc;
  if (divisor) doc["divisor"] = divisor_json(*divisor);
  doc["schubert_lines"] = lines;
  doc["walls"] = listed;
  if (oracle) {
    for (int j = 1; j <= m.length(); ++j) {
      const SchubertLine l = schubert_line(m, j);
      agree_or_throw(oracle::wall_relation_generic(m, l.wall) == l.curve, "Schubert line " + std::to_string(j));
    }
    for (const Wall& w : walls) agree_or_throw(oracle::wall_relation_generic(m, w) == wall_relation(m, w), "wall");
    doc["oracle"] = {{"agrees", true}};
  }
  return doc;
}

Document cmd_logfano(const Job& job, const json& raw, bool oracle) {
  const int r = job.m.length();
  std::vector<Rational> a(static_cast<std::size_t>(r), Rational(0));
  if (raw.contains("boundary")) {
    a.clear();
    for (const json& x : array_of(raw["boundary"], "boundary")) a.push_back(as_rational(x, "boundary coefficient"));
  }
  std::vector<Int> b;
  if (raw.contains("b")) {
    for (const json& x : array_of(raw["b"], "b")) b.push_back(as_int(x, "b entry"));
    if (static_cast<int>(b.size()) != r) throw InputError("b must have one entry per word letter");
  } else {
    for (const GammaDatum& g : gamma_data(job.gcm, job.word)) b.push_back(g.b);
  }
  const LogFanoResult res = log_fano(job.m, b, a);
  Document doc;
  doc["boundary"] = rationals_json(a);
  doc["b"] = res.b;
  doc["f"] = rationals_json(res.f);
  doc["log_fano"] = res.log_fano;
  doc["witness"] = res.witness ? Document(*res.witness) : Document(nullptr);
  if (oracle) {
    for (int i = 1; i <= r; ++i) {
      Rational f = Rational(b[i - 1]) + 1 + a[i - 1];
      for (const auto& [ray, c] : exhaustive_gamma(job.m, i))
        if (ray.sign == Sign::plus) f = f - Rational(c) * (Rational(b[ray.position - 1]) + 1 + a[ray.position - 1]);
      agree_or_throw(f == res.f[i - 1], "f_" + std::to_string(i));
    }
    doc["oracle"] = {{"agrees", true}};
  }
  return doc;
}

Document cmd_convert(const Job& job, const json& raw, bool oracle) {
  const int r = job.m.length();
  const auto divisor = parse_divisor(raw, r);
  const IntMatrix h = h_table(job.m);
  Document doc;
  doc["h_table"] = matrix_json(h);
  if (divisor) {
    doc["divisor"] = divisor_json(*divisor);
    doc["g"] = rationals_json(g_values(job.m, *divisor));
  }
  if (oracle) {
    agree_or_throw(h == oracle::h_table_by_elimination(job.m), "h table");
    if (divisor) {
      const auto g = g_values(job.m, *divisor);
      ToricDivisor converted;
      for (int i = 1; i <= r; ++i) converted.coeffs[RayId::plus(i)] = g[i - 1];
      for (const CurveClass& c : mori_cone_basis(job.m))
        agree_or_throw(intersect(*divisor, c) == intersect(converted, c), "g conversion");
    }
    doc["oracle"] = {{"agrees", true}};
  }
  return doc;
}

// ---------------------------------------------------------------- rendering

std::string scalar_text(const Document& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

bool is_flat(const Document& v) {
  if (!v.is_array()) return !v.is_object();
  return std::all_of(v.begin(), v.end(), [](const Document& x) { return x.is_primitive(); });
}

void render(const Document& v, const std::string& indent, std::ostringstream& os);

void render_rows(const Document& rows, const std::string& indent, std::ostringstream& os) {
  std::vector<std::string> cols;
  for (const auto& row : rows)
    for (const auto& [k, _] : row.items())
      if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t> width;
  for (const auto& c : cols) width.push_back(c.size());
  for (const auto& row : rows) {
    auto& line = cells.emplace_back();
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const auto it = row.find(cols[c]);
      line.push_back(it == row.end() ? "" : (is_flat(*it) ? scalar_text(*it) : it->dump()));
      width[c] = std::max(width[c], line.back().size());
    }
  }
  const auto emit = [&](const std::vector<std::string>& line) {
    os << indent;
    for (std::size_t c = 0; c < line.size(); ++c)
      os << line[c] << std::string(c + 1 < line.size() ? width[c] - line[c].size() + 2 : 0, ' ');
    os << '\n';
  };
  emit(cols);
  for (const auto& line : cells) emit(line);
}

void render(const Document& v, const std::string& indent, std::ostringstream& os) {
  for (const auto& [key, value] : v.items()) {
    if (value.is_primitive()) {
      os << indent << key << ": " << scalar_text(value) << '\n';
    } else if (is_flat(value)) {
      os << indent << key << ": " << (value.empty() ? "(none)" : "");
      for (std::size_t i = 0; i < value.size(); ++i) os << (i ? " " : "") << scalar_text(value[i]);
      os << '\n';
    } else if (value.is_array() && std::all_of(value.begin(), value.end(), [](const Document& x) { return x.is_object(); })) {
      os << indent << key << ":\n";
      render_rows(value, indent + "  ", os);
    } else if (value.is_array()) {
      os << indent << key << ":\n";
      for (const auto& x : value) os << indent << "  " << (is_flat(x) ? scalar_text(x) : x.dump()) << '\n';
    } else {
      os << indent << key << ":\n";
      render(value, indent + "  ", os);
    }
  }
}

// ---------------------------------------------------------------- driver

struct Settings {
  std::string command;
  std::string input = "-";
  std::string format = "json";
  bool sorted_keys = false;
  bool oracle = false;
  bool self_test = false;
  std::uint64_t seed = 1;
  int cases = 500;
};

std::string emit(const Document& doc, const Settings& s, bool compact) {
  if (s.format == "table") return render_table(doc);
  const int indent = compact ? -1 : 2;
  if (s.sorted_keys) return json::parse(doc.dump()).dump(indent) + "\n";
  return doc.dump(indent) + "\n";
}

int exit_code_for(const std::exception_ptr& e, std::string& message) {
  try {
    std::rethrow_exception(e);
  } catch (const InputError& x) {
    message = x.what();
    return 1;
  } catch (const json::exception& x) {
    message = std::string("malformed JSON: ") + x.what();
    return 1;
  } catch (const ConsistencyError& x) {
    message = std::string("internal consistency failure: ") + x.what();
    return 2;
  } catch (const std::exception& x) {
    message = std::string("internal error: ") + x.what();
    return 2;
  }
}

std::string read_all(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw InputError("cannot open input file " + path);
    buf << file.rdbuf();
  }
  return buf.str();
}

std::string job_command(const json& job, const std::string& flag) {
  std::string from_job;
  if (job.is_object() && job.contains("command")) {
    if (!job["command"].is_string()) throw InputError("command must be a string");
    from_job = job["command"].get<std::string>();
  }
  if (!flag.empty() && flag != "batch" && !from_job.empty() && from_job != flag)
    throw InputError("job command \"" + from_job + "\" conflicts with --command " + flag);
  const std::string cmd = (flag.empty() || flag == "batch") ? from_job : flag;
  if (cmd.empty()) throw InputError("no command given (use --command or a \"command\" key)");
  return cmd;
}

int run_batch(const std::string& text, const Settings& s, std::ostream& out, std::ostream& err) {
  std::istringstream lines(text);
  std::string line;
  int worst = 0;
  int number = 0;
  while (std::getline(lines, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const json job = json::parse(line);
      const std::string cmd = job_command(job, "batch");
      if (cmd == "batch") throw InputError("batch jobs cannot nest");
      out << emit(execute(cmd, job, s.oracle), s, true);
    } catch (...) {
      std::string message;
      const int code = exit_code_for(std::current_exception(), message);
      worst = std::max(worst, code);
      err << "error (line " << number << "): " << message << '\n';
      Document e;
      e["error"] = message;
      e["exit_code"] = code;
      e["line"] = number;
      out << emit(e, s, true);
    }
    out.flush();
  }
  return worst;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"fan", "matrix", "classify", "ample", "nef",
                                                  "mori", "intersect", "logfano", "convert", "batch"};
  return names;
}

Document execute(const std::string& command, const json& raw, bool oracle) {
  const Job job = parse_job(raw);
  if (oracle && job.word.length() > kMaxOracleLength)
    throw InputError("--oracle needs word length <= " + std::to_string(kMaxOracleLength) + ", got " +
                     std::to_string(job.word.length()));

  Document body;
  if (command == "fan") body = cmd_fan(job, raw, oracle);
  else if (command == "matrix") body = cmd_matrix(job, raw, oracle);
  else if (command == "classify") body = cmd_classify(job, raw, oracle);
  else if (command == "ample") body = cmd_positivity(job, raw, oracle, true);
  else if (command == "nef") body = cmd_positivity(job, raw, oracle, false);
  else if (command == "mori") body = cmd_mori(job, raw, oracle);
  else if (command == "intersect") body = cmd_intersect(job, raw, oracle);
  else if (command == "logfano") body = cmd_logfano(job, raw, oracle);
  else if (command == "convert") body = cmd_convert(job, raw, oracle);
  else throw InputError("unknown command \"" + command + "\"");

  Document doc;
  doc["command"] = command;
  doc["root_system"] = job.root_system;
  doc["word"] = job.word.letters();
  doc["length"] = job.word.length();
  for (auto& [key, value] : body.items()) doc[key] = value;
  return doc;
}

std::string render_table(const Document& doc) {
  std::ostringstream os;
  render(doc, "", os);
  return os.str();
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Exact computations on the Bott-tower toric limit of a Bott-Samelson variety"};
  app.add_option("--command", s.command, "Command to run")->check(CLI::IsMember(command_names()));
  app.add_option("--input", s.input, "Job file, or - for stdin")->capture_default_str();
  app.add_option("--format", s.format, "Output format")->check(CLI::IsMember({"json", "table"}))->capture_default_str();
  app.add_flag("--sorted-keys", s.sorted_keys, "Sort object keys in JSON output");
  app.add_flag("--oracle", s.oracle, "Also run the brute-force verification path");
  app.add_option("--seed", s.seed, "Seed for --self-test")->capture_default_str();
  app.add_option("--cases", s.cases, "Number of fuzz cases for --self-test")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_flag("--self-test", s.self_test, "Run the randomized oracle comparison suite");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (s.self_test) {
      const auto tallies = oracle::self_test(s.seed, s.cases);
      Document checks = Document::array();
      bool ok = true;
      for (const auto& t : tallies) {
        ok = ok && t.failed == 0;
        checks.push_back({{"name", t.name}, {"passed", t.passed}, {"failed", t.failed},
                          {"first_failure", t.first_failure.empty() ? Document(nullptr) : Document(t.first_failure)}});
      }
      Document doc;
      doc["seed"] = s.seed;
      doc["cases"] = s.cases;
      doc["checks"] = checks;
      doc["ok"] = ok;
      out << emit(doc, s, false);
      return ok ? 0 : 2;
    }

    const std::string text = read_all(s.input, in);
    if (s.command == "batch") return run_batch(text, s, out, err);

    const json job = json::parse(text);
    out << emit(execute(job_command(job, s.command), job, s.oracle), s, false);
    return 0;
  } catch (...) {
    std::string message;
    const int code = exit_code_for(std::current_exception(), message);
    err << "error: " << message << '\n';
    return code;
  }
}

}  // namespace bott::cli
