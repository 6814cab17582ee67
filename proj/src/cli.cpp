#include "wysiwyg/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <functional>
#include <json.hpp>
#include <mutex>
#include <optional>
#include <ostream>
#include <thread>

#include "wysiwyg/acceptance.hpp"
#include "wysiwyg/experiments.hpp"

namespace wysiwyg {

namespace {

using nlohmann::json;

struct Options {
  std::string mode = "psi";
  std::string decay_mode = "omega";
  std::vector<std::string> elems;
  std::string g, h;
  bool delta_exact = false;
  std::optional<double> delta;
  std::optional<int> delta_root_n;
  std::string out = "text";
  int jobs = 1;
  int n_max = -1;
  std::string tree;
  std::string algo = "join";
  bool no_timing = false;
  Caps caps = Caps::from_env();
};

// One computed row: the fixed CSV columns.
struct Row {
  std::string n;
  std::string mode;
  std::optional<RationalFunction> exact;
  std::optional<double> numeric;
  std::size_t terms = 0;
  double millis = 0;
};

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string millis_text(double ms) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  return buf;
}

// Resolved delta specification: exact, or a number.
struct DeltaSpec {
  bool exact = true;
  double value = 0;
};

// The normalized vertex needs lambda = (delta^2-2)/delta > 0.
double checked_delta(double delta) {
  if (!std::isfinite(delta) || !(lambda_at(delta) > 1e-12)) {
    throw DomainError("delta = " + num(delta) + " gives lambda <= 0; need delta > sqrt(2)");
  }
  return delta;
}

DeltaSpec resolve_delta(const Options& o, std::ostream& err) {
  const int given = (o.delta_exact ? 1 : 0) + (o.delta ? 1 : 0) + (o.delta_root_n ? 1 : 0);
  if (given > 1) throw DomainError("give exactly one of --delta-exact, --delta, --delta-root");
  if (o.delta_root_n) return {false, checked_delta(delta_root(*o.delta_root_n))};
  if (o.delta) {
    checked_delta(*o.delta);
    if (!admissible_delta(*o.delta)) {
      err << "warning: delta = " << num(*o.delta) << " is outside {2cos(pi/n), n >= 4} u [2, inf)\n";
    }
    return {false, *o.delta};
  }
  return {true, 0};
}

// Runs f(0..n-1) on `jobs` threads; results come back in index order.
template <class T>
std::vector<T> parallel_map(int n, int jobs, const std::function<T(int)>& f) {
  std::vector<std::optional<T>> slots(static_cast<std::size_t>(n));
  std::exception_ptr failure;
  std::mutex mu;
  std::atomic<int> next{0};
  auto worker = [&] {
    while (true) {
      const int i = next++;
      if (i >= n) return;
      {
        std::lock_guard<std::mutex> lock(mu);
        if (failure) return;
      }
      try {
        slots[static_cast<std::size_t>(i)] = f(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const int k = std::clamp(jobs, 1, std::max(1, n));
  if (k == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < k; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  std::vector<T> out;
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

void write_rows(const std::vector<Row>& rows, const Options& o, std::ostream& out, bool label_in_text,
                const json& extra = json::object(), const std::vector<std::string>& text_tail = {}) {
  auto exact_text = [](const Row& r) { return r.exact ? r.exact->to_string() : std::string(); };
  auto numeric_text = [](const Row& r) { return r.numeric ? num(*r.numeric) : std::string(); };
  auto ms = [&](const Row& r) { return o.no_timing ? 0.0 : r.millis; };
  if (o.out == "csv") {
    out << "n,mode,exact,numeric,terms,millis\n";
    for (const auto& r : rows) {
      out << r.n << ',' << r.mode << ',' << exact_text(r) << ',' << numeric_text(r) << ',' << r.terms << ','
          << millis_text(ms(r)) << '\n';
    }
  } else if (o.out == "json") {
    json j = extra;
    j["rows"] = json::array();
    for (const auto& r : rows) {
      json row = {{"n", r.n}, {"mode", r.mode}, {"terms", r.terms}, {"millis", ms(r)}};
      row["exact"] = r.exact ? json(exact_text(r)) : json(nullptr);
      row["numeric"] = r.numeric ? json(*r.numeric) : json(nullptr);
      j["rows"].push_back(row);
    }
    out << j.dump(2) << '\n';
  } else {
    for (const auto& r : rows) {
      std::string value = r.exact ? exact_text(r) : numeric_text(r);
      if (r.exact && r.numeric) value += "  ~ " + numeric_text(r);
      if (label_in_text) {
        out << r.n << '\t' << value << '\n';
      } else {
        out << value << '\n';
      }
    }
    for (const auto& line : text_tail) out << line << '\n';
  }
}

void write_element(const std::string& key, const FElement& g, const Options& o, std::ostream& out) {
  const std::string s = serialize_element(g);
  if (o.out == "json") {
    out << json{{key, s}, {"leaves", g.leaf_count()}}.dump(2) << '\n';
  } else if (o.out == "csv") {
    out << key << ",leaves\n" << s << ',' << g.leaf_count() << '\n';
  } else {
    out << s << '\n';
  }
}

Row coeff_row(const std::string& label, Mode mode, const FElement& g, const DeltaSpec& ds, const Caps& caps) {
  const CoeffReport rep =
      coeff_report(mode, g, label, ds.exact, ds.exact ? std::nullopt : std::optional<double>(ds.value), caps);
  return {label, mode_name(mode), rep.exact, rep.numeric, rep.stats.peak_terms, rep.millis};
}

std::string threshold_text(const Threshold& t) { return t.n ? std::to_string(*t.n) : "none"; }

int cmd_mul(const Options& o, std::ostream& out) {
  const FElement g = parse_element(o.g), h = parse_element(o.h);
  if (o.algo != "join" && o.algo != "rewrite") throw DomainError("--algo must be join or rewrite");
  write_element("product", o.algo == "join" ? multiply(g, h) : multiply_rewrite(g, h), o, out);
  return kExitOk;
}

int cmd_inv(const Options& o, std::ostream& out) {
  if (o.elems.size() != 1) throw DomainError("inv takes exactly one --elem");
  write_element("inverse", inverse(parse_element(o.elems.front())), o, out);
  return kExitOk;
}

int cmd_coeff(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.elems.empty()) throw DomainError("coeff needs at least one --elem");
  const Mode mode = parse_mode(o.mode);
  const DeltaSpec ds = resolve_delta(o, err);
  std::vector<FElement> gs;
  for (const auto& e : o.elems) gs.push_back(parse_element(e));
  const auto rows = parallel_map<Row>(static_cast<int>(gs.size()), o.jobs, [&](int i) {
    return coeff_row(o.elems[static_cast<std::size_t>(i)], mode, gs[static_cast<std::size_t>(i)], ds, o.caps);
  });
  write_rows(rows, o, out, rows.size() > 1);
  return kExitOk;
}

int cmd_gram(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.elems.empty()) throw DomainError("gram needs --elem");
  if (o.elems.size() > 12) throw DomainError("gram matrices are limited to 12 elements");
  const Mode mode = parse_mode(o.mode);
  const DeltaSpec ds = resolve_delta(o, err);
  std::vector<FElement> gs;
  for (const auto& e : o.elems) gs.push_back(parse_element(e));
  const int k = static_cast<int>(gs.size());
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < k; ++i) {
    for (int j = i; j < k; ++j) cells.emplace_back(i, j);
  }
  const auto upper = parallel_map<Row>(static_cast<int>(cells.size()), o.jobs, [&](int c) {
    const auto [i, j] = cells[static_cast<std::size_t>(c)];
    const FElement x = multiply(inverse(gs[static_cast<std::size_t>(j)]), gs[static_cast<std::size_t>(i)]);
    return coeff_row("", mode, x, ds, o.caps);
  });
  std::vector<Row> rows;
  std::vector<std::vector<double>> numeric(static_cast<std::size_t>(k), std::vector<double>(static_cast<std::size_t>(k)));
  std::vector<std::vector<std::string>> text(static_cast<std::size_t>(k), std::vector<std::string>(static_cast<std::size_t>(k)));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      const auto [a, b] = std::minmax(i, j);
      const auto it = std::find(cells.begin(), cells.end(), std::pair{a, b});
      Row r = upper[static_cast<std::size_t>(it - cells.begin())];
      r.n = std::to_string(i + 1) + ":" + std::to_string(j + 1);
      if (r.numeric) numeric[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = *r.numeric;
      text[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = r.exact ? r.exact->to_string() : num(*r.numeric);
      rows.push_back(std::move(r));
    }
  }
  json extra = json::object();
  std::vector<std::string> tail;
  if (!ds.exact) {
    const double ev = min_eigenvalue(numeric);
    extra["min_eigenvalue"] = ev;
    tail.push_back("min eigenvalue " + num(ev));
  }
  if (o.out == "text") {
    for (const auto& line : text) {
      std::string s;
      for (std::size_t j = 0; j < line.size(); ++j) s += (j ? "\t" : "") + line[j];
      out << s << '\n';
    }
    for (const auto& t : tail) out << t << '\n';
  } else {
    write_rows(rows, o, out, true, extra);
  }
  return kExitOk;
}

// Rows for an exact "holds from N on" experiment.
int write_threshold(const std::vector<Row>& rows, const Threshold& th, const Options& o, std::ostream& out) {
  json extra = {{"threshold", th.n ? json(*th.n) : json(nullptr)}};
  write_rows(rows, o, out, true, extra, {"N = " + threshold_text(th)});
  return kExitOk;
}

std::vector<Row> exact_rows(const std::vector<RationalFunction>& values, const std::vector<double>& ms,
                            const char* mode, const DeltaSpec& ds) {
  std::vector<Row> rows;
  for (std::size_t n = 0; n < values.size(); ++n) {
    Row r{std::to_string(n), mode, values[n], std::nullopt, 0, ms[n]};
    if (!ds.exact) r.numeric = values[n].eval(ds.value);
    rows.push_back(std::move(r));
  }
  return rows;
}

Threshold threshold_of(const std::vector<RationalFunction>& values, const RationalFunction& rhs) {
  Threshold t;
  for (const auto& v : values) t.holds.push_back(v == rhs);
  int n = static_cast<int>(t.holds.size());
  while (n > 0 && t.holds[static_cast<std::size_t>(n - 1)]) --n;
  if (n < static_cast<int>(t.holds.size())) t.n = n;
  return t;
}

int cmd_lemma43(const Options& o, std::ostream& out, std::ostream& err) {
  const FElement g = parse_element(o.g.empty() ? "D" : o.g), h = parse_element(o.h.empty() ? "D" : o.h);
  const DeltaSpec ds = resolve_delta(o, err);
  const int n_max = o.n_max < 0 ? 15 : o.n_max;
  std::vector<double> ms(static_cast<std::size_t>(n_max + 1));
  const auto values = parallel_map<RationalFunction>(n_max + 1, o.jobs, [&](int n) {
    const auto t0 = std::chrono::steady_clock::now();
    RationalFunction v = lemma43_lhs(g, h, n, o.caps);
    ms[static_cast<std::size_t>(n)] = since(t0);
    return v;
  });
  const RationalFunction rhs = coeff(Mode::Psi, g, o.caps) * coeff(Mode::Psi, h, o.caps);
  return write_threshold(exact_rows(values, ms, "psi", ds), threshold_of(values, rhs), o, out);
}

int cmd_sigma(const Options& o, std::ostream& out, std::ostream& err) {
  const FElement g = parse_element(o.g.empty() ? "A" : o.g);
  const DeltaSpec ds = resolve_delta(o, err);
  const int n_max = o.n_max < 0 ? 10 : o.n_max;
  const LimitVector xi = vacuum(Mode::Psi, o.tree.empty() ? full_tree(2) : parse_tree(o.tree));
  std::vector<double> ms(static_cast<std::size_t>(n_max + 1));
  const auto values = parallel_map<RationalFunction>(n_max + 1, o.jobs, [&](int n) {
    const auto t0 = std::chrono::steady_clock::now();
    RationalFunction v = inner_product(act(sigma_pow(g, n), xi, o.caps), xi, o.caps).exact();
    ms[static_cast<std::size_t>(n)] = since(t0);
    return v;
  });
  const RationalFunction rhs = coeff(Mode::Omega, g, o.caps) * inner_product(xi, xi, o.caps).exact();
  return write_threshold(exact_rows(values, ms, "psi", ds), threshold_of(values, rhs), o, out);
}

int cmd_decay(const Options& o, std::ostream& out, std::ostream& err) {
  const Mode mode = parse_mode(o.decay_mode);
  const DeltaSpec ds = resolve_delta(o, err);
  const int n_max = o.n_max < 0 ? 15 : o.n_max;
  const auto rows = parallel_map<Row>(n_max, o.jobs, [&](int i) {
    const int n = i + 1;
    return coeff_row(std::to_string(n), mode, power_A(n), ds, o.caps);
  });
  std::vector<std::string> tail;
  if (!ds.exact && rows.size() >= 2) {
    tail.push_back("ratio at n=" + rows.back().n + " " + num(*rows.back().numeric / *rows[rows.size() - 2].numeric));
  }
  write_rows(rows, o, out, true, json::object(), tail);
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const bool text = o.out != "json";
  const auto results = run_acceptance(o.caps, [&](const CriterionResult& r) {
    if (text) out << format_result(r) << std::endl;
  });
  const bool ok = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.pass; });
  if (!text) {
    json j = json::array();
    for (const auto& r : results) {
      j.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}, {"seconds", r.seconds}});
    }
    out << j.dump(2) << '\n';
  }
  return ok ? kExitOk : kExitDomain;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Thompson's group F and its Wysiwyg representations"};
  app.name("wysiwyg");
  // subcommands inherit this; "-h" would clash with --h
  app.set_help_flag("--help", "print help");
  app.require_subcommand(1);

  auto add_delta = [&](CLI::App* s) {
    auto* ex = s->add_flag("--delta-exact", o.delta_exact, "symbolic delta (default)");
    auto* fl = s->add_option("--delta", o.delta, "numeric delta");
    auto* rt = s->add_option("--delta-root", o.delta_root_n, "delta = 2cos(pi/n)");
    ex->excludes(fl, rt);
    fl->excludes(rt);
  };
  auto add_common = [&](CLI::App* s) {
    s->add_option("--out", o.out, "csv|json|text")->check(CLI::IsMember({"csv", "json", "text"}));
    s->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
    s->add_flag("--no-timing", o.no_timing, "report millis as 0 for reproducible output");
    s->add_option("--max-width", o.caps.max_width, "cap on simultaneous X-strands");
    s->add_option("--max-terms", o.caps.max_terms, "cap on terms per state");
    s->add_option("--max-leaves", o.caps.max_leaves, "cap on tree leaves");
  };
  auto add_mode = [&](CLI::App* s, std::string& target) {
    s->add_option("--mode", target, "psi|omega")->check(CLI::IsMember({"psi", "omega"}));
  };

  auto* mul = app.add_subcommand("mul", "product g h");
  mul->add_option("--g", o.g)->required();
  mul->add_option("--h", o.h)->required();
  mul->add_option("--algo", o.algo, "join|rewrite");
  add_common(mul);

  auto* inv = app.add_subcommand("inv", "inverse");
  inv->add_option("--elem", o.elems)->required();
  add_common(inv);

  auto* co = app.add_subcommand("coeff", "vacuum coefficient <g vac, vac>");
  co->add_option("--elem", o.elems, "element(s)")->required();
  add_mode(co, o.mode);
  add_delta(co);
  add_common(co);

  auto* gr = app.add_subcommand("gram", "Gram matrix of g_i vac");
  gr->add_option("--elem", o.elems, "elements (repeat or comma-separated)")->required()->delimiter(',');
  add_mode(gr, o.mode);
  add_delta(gr);
  add_common(gr);

  auto* lm = app.add_subcommand("lemma43", "<A^n g Psi, h Psi> against coeff(g) coeff(h)");
  lm->add_option("--g", o.g);
  lm->add_option("--h", o.h);
  lm->add_option("--n-max", o.n_max);
  add_delta(lm);
  add_common(lm);

  auto* sg = app.add_subcommand("sigma-limit", "<sigma^n(g) Psi, Psi> against coeff(omega, g)");
  sg->add_option("--g", o.g);
  sg->add_option("--n-max", o.n_max);
  sg->add_option("--tree", o.tree, "tree carrying xi = eta = Psi (default full tree on 4 leaves)");
  add_delta(sg);
  add_common(sg);

  auto* dc = app.add_subcommand("an-decay", "coeff(A^n) for n = 1..n-max");
  dc->add_option("--n-max", o.n_max);
  add_mode(dc, o.decay_mode);
  add_delta(dc);
  add_common(dc);

  auto* vf = app.add_subcommand("verify", "run the acceptance suite");
  add_common(vf);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  try {
    if (mul->parsed()) return cmd_mul(o, out);
    if (inv->parsed()) return cmd_inv(o, out);
    if (co->parsed()) return cmd_coeff(o, out, err);
    if (gr->parsed()) return cmd_gram(o, out, err);
    if (lm->parsed()) return cmd_lemma43(o, out, err);
    if (sg->parsed()) return cmd_sigma(o, out, err);
    if (dc->parsed()) return cmd_decay(o, out, err);
    if (vf->parsed()) return cmd_verify(o, out);
  } catch (const ResourceCapError& e) {
    err << "resource cap: " << e.what() << " (reached " << e.reached() << ")\n";
    return kExitCap;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitDomain;
}

}  // namespace wysiwyg
