#include "wysiwyg/thompson.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "wysiwyg/errors.hpp"

namespace wysiwyg {

// -------------------------------------------------------------- reduction

FElement reduce_pair_with(const Tree& top, const Tree& bottom,
                          const std::function<std::size_t(std::size_t)>& choose) {
  if (top.leaf_count() != bottom.leaf_count()) {
    throw DomainError("tree pair leaf counts differ: " + std::to_string(top.leaf_count()) + " vs " +
                      std::to_string(bottom.leaf_count()));
  }
  Tree a = top, b = bottom;
  while (true) {
    const auto sa = sibling_leaf_pairs(a);
    const auto sb = sibling_leaf_pairs(b);
    std::vector<int> common;
    std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(common));
    if (common.empty()) break;
    const std::size_t pick = choose ? choose(common.size()) % common.size() : 0;
    a = remove_caret(a, common[pick]);
    b = remove_caret(b, common[pick]);
  }
  return FElement(a, b);
}

FElement reduce_pair(const Tree& top, const Tree& bottom) { return reduce_pair_with(top, bottom, {}); }

FElement identity() { return FElement(); }

FElement inverse(const FElement& g) { return reduce_pair(g.bottom(), g.top()); }

FElement multiply(const FElement& g, const FElement& h) {
  // g = a/b, h = c/d; b.f = c.f' gives g*h = (a.f)/(d.f').
  const TreeJoin j = tree_join(g.bottom(), h.top());
  return reduce_pair(graft(g.top(), j.f), graft(h.bottom(), j.g));
}

// ---------------------------------------------------- strand-diagram moves

namespace {

enum class Kind { Source, Sink, Split, Merge };

struct Vertex {
  Kind kind;
  int in[2] = {-1, -1};
  int out[2] = {-1, -1};
  bool alive = true;
};

struct Edge {
  int from = -1, from_port = 0;
  int to = -1, to_port = 0;
  bool alive = true;
};

// Planar strand diagram: splits have one input and a (left, right) output
// pair, merges have a (left, right) input pair and one output.
class StrandDiagram {
 public:
  StrandDiagram() {
    source_ = add_vertex(Kind::Source);
    sink_ = add_vertex(Kind::Sink);
  }

  int source_edge() { return new_edge(source_, 0); }

  std::vector<int> grow_splits(const Tree& t, int edge) {
    std::vector<int> leaves;
    splits_into(t, edge, leaves);
    return leaves;
  }

  int grow_merges(const Tree& t, const std::vector<int>& leaves) {
    std::size_t next = 0;
    const int e = merges_from(t, leaves, next);
    if (next != leaves.size()) throw std::logic_error("merge tree does not consume every strand");
    return e;
  }

  void close(int edge) { attach(edge, sink_, 0); }

  struct Move {
    int vertex;
    bool bigon;
  };

  std::vector<Move> available_moves() const {
    std::vector<Move> moves;
    for (int v = 0; v < static_cast<int>(vs_.size()); ++v) {
      const Vertex& x = vs_[static_cast<std::size_t>(v)];
      if (!x.alive) continue;
      if (x.kind == Kind::Split) {
        const Edge& l = es_[static_cast<std::size_t>(x.out[0])];
        const Edge& r = es_[static_cast<std::size_t>(x.out[1])];
        if (l.to == r.to && vs_[static_cast<std::size_t>(l.to)].kind == Kind::Merge && l.to_port == 0 &&
            r.to_port == 1) {
          moves.push_back({v, true});
        }
      } else if (x.kind == Kind::Merge) {
        const Edge& o = es_[static_cast<std::size_t>(x.out[0])];
        if (vs_[static_cast<std::size_t>(o.to)].kind == Kind::Split) moves.push_back({v, false});
      }
    }
    return moves;
  }

  void apply(const Move& m) {
    if (m.bigon) {
      Vertex& s = vs_[static_cast<std::size_t>(m.vertex)];
      const int merge = es_[static_cast<std::size_t>(s.out[0])].to;
      Vertex& mv = vs_[static_cast<std::size_t>(merge)];
      const int ein = s.in[0];
      const int eout = mv.out[0];
      const Edge out = es_[static_cast<std::size_t>(eout)];
      kill_edge(s.out[0]);
      kill_edge(s.out[1]);
      kill_edge(eout);
      s.alive = false;
      mv.alive = false;
      attach(ein, out.to, out.to_port);
    } else {
      Vertex& mv = vs_[static_cast<std::size_t>(m.vertex)];
      const int mid = mv.out[0];
      const int split = es_[static_cast<std::size_t>(mid)].to;
      Vertex& s = vs_[static_cast<std::size_t>(split)];
      const int il = mv.in[0], ir = mv.in[1];
      const Edge ol = es_[static_cast<std::size_t>(s.out[0])];
      const Edge orr = es_[static_cast<std::size_t>(s.out[1])];
      kill_edge(s.out[0]);
      kill_edge(s.out[1]);
      kill_edge(mid);
      mv.alive = false;
      s.alive = false;
      attach(il, ol.to, ol.to_port);
      attach(ir, orr.to, orr.to_port);
    }
  }

  // Splits form the bottom tree above the source, merges the top tree
  // below the sink; their leaves must be the same strands in order.
  std::pair<Tree, Tree> read_pair() const {
    std::vector<int> lb, lt;
    Tree bottom = read_up(vs_[static_cast<std::size_t>(source_)].out[0], lb);
    Tree top = read_down(vs_[static_cast<std::size_t>(sink_)].in[0], lt);
    if (lb != lt) throw std::logic_error("strand diagram is not split-below-merge after rewriting");
    return {top, bottom};
  }

 private:
  int add_vertex(Kind k) {
    vs_.push_back(Vertex{k});
    return static_cast<int>(vs_.size()) - 1;
  }

  int new_edge(int from, int port) {
    Edge e;
    e.from = from;
    e.from_port = port;
    es_.push_back(e);
    const int id = static_cast<int>(es_.size()) - 1;
    vs_[static_cast<std::size_t>(from)].out[port] = id;
    return id;
  }

  void attach(int edge, int to, int port) {
    es_[static_cast<std::size_t>(edge)].to = to;
    es_[static_cast<std::size_t>(edge)].to_port = port;
    vs_[static_cast<std::size_t>(to)].in[port] = edge;
  }

  void kill_edge(int e) { es_[static_cast<std::size_t>(e)].alive = false; }

  void splits_into(const Tree& t, int edge, std::vector<int>& leaves) {
    if (t.is_leaf()) {
      leaves.push_back(edge);
      return;
    }
    const int v = add_vertex(Kind::Split);
    attach(edge, v, 0);
    const int l = new_edge(v, 0);
    const int r = new_edge(v, 1);
    splits_into(t.left(), l, leaves);
    splits_into(t.right(), r, leaves);
  }

  int merges_from(const Tree& t, const std::vector<int>& leaves, std::size_t& next) {
    if (t.is_leaf()) return leaves.at(next++);
    const int l = merges_from(t.left(), leaves, next);
    const int r = merges_from(t.right(), leaves, next);
    const int v = add_vertex(Kind::Merge);
    attach(l, v, 0);
    attach(r, v, 1);
    return new_edge(v, 0);
  }

  Tree read_up(int edge, std::vector<int>& leaves) const {
    const Edge& e = es_[static_cast<std::size_t>(edge)];
    const Vertex& v = vs_[static_cast<std::size_t>(e.to)];
    if (v.kind != Kind::Split) {
      leaves.push_back(edge);
      return Tree::leaf();
    }
    Tree l = read_up(v.out[0], leaves);
    Tree r = read_up(v.out[1], leaves);
    return Tree::caret(l, r);
  }

  Tree read_down(int edge, std::vector<int>& leaves) const {
    const Edge& e = es_[static_cast<std::size_t>(edge)];
    const Vertex& v = vs_[static_cast<std::size_t>(e.from)];
    if (v.kind != Kind::Merge) {
      leaves.push_back(edge);
      return Tree::leaf();
    }
    Tree l = read_down(v.in[0], leaves);
    Tree r = read_down(v.in[1], leaves);
    return Tree::caret(l, r);
  }

  std::vector<Vertex> vs_;
  std::vector<Edge> es_;
  int source_ = -1, sink_ = -1;
};

}  // namespace

FElement multiply_rewrite(const FElement& g, const FElement& h, RewriteStats* stats,
                          const std::function<std::size_t(std::size_t)>& choose) {
  // Bottom to top: h's splits, h's merges, g's splits, g's merges.
  StrandDiagram diagram;
  auto leaves = diagram.grow_splits(h.bottom(), diagram.source_edge());
  int e = diagram.grow_merges(h.top(), leaves);
  leaves = diagram.grow_splits(g.bottom(), e);
  e = diagram.grow_merges(g.top(), leaves);
  diagram.close(e);

  RewriteStats local;
  while (true) {
    const auto moves = diagram.available_moves();
    if (moves.empty()) break;
    const auto& m = moves[choose ? choose(moves.size()) % moves.size() : 0];
    (m.bigon ? local.bigon_moves : local.exchange_moves)++;
    diagram.apply(m);
  }
  if (stats != nullptr) *stats = local;

  const auto [top, bottom] = diagram.read_pair();
  FElement r = reduce_pair(top, bottom);
  if (r.leaf_count() != top.leaf_count()) throw std::logic_error("rewrite normal form is not reduced");
  return r;
}

// ------------------------------------------------------- named elements

FElement generator_A() { return reduce_pair(parse_tree("((.,.),.)"), parse_tree("(.,(.,.))")); }

FElement generator_B() { return sigma(generator_A()); }

// The figure's literal reading ((.,(.,.)),.)/(.,((.,.),.)) cancels down to A;
// moving the bottom tree's inner caret one leaf right gives a reduced pair
// with the required coefficient.
FElement element_D() { return reduce_pair(parse_tree("((.,(.,.)),.)"), parse_tree("(.,(.,(.,.)))")); }

FElement power_A(int n) {
  if (n == 0) return identity();
  const int leaves = std::abs(n) + 2;
  FElement an = reduce_pair(left_comb(leaves), right_comb(leaves));
  return n > 0 ? an : inverse(an);
}

FElement power(const FElement& g, int n) {
  FElement base = n >= 0 ? g : inverse(g);
  unsigned e = static_cast<unsigned>(n >= 0 ? n : -n);
  FElement result;
  while (e != 0) {
    if (e & 1U) result = multiply(result, base);
    e >>= 1U;
    if (e != 0) base = multiply(base, base);
  }
  return result;
}

FElement sigma(const FElement& g) {
  return reduce_pair(Tree::caret(Tree::leaf(), g.top()), Tree::caret(Tree::leaf(), g.bottom()));
}

FElement sigma_pow(const FElement& g, int n) {
  FElement r = g;
  for (int k = 0; k < n; ++k) r = sigma(r);
  return r;
}

// -------------------------------------------------------------- text form

FElement parse_element(std::string_view text) {
  const auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    Tree top, bottom;
    try {
      top = parse_tree(text.substr(0, slash));
    } catch (const ParseError& e) {
      throw ParseError("bad top tree", e.position());
    }
    try {
      bottom = parse_tree(text.substr(slash + 1));
    } catch (const ParseError& e) {
      throw ParseError("bad bottom tree", slash + 1 + e.position());
    }
    return reduce_pair(top, bottom);
  }

  FElement result;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == '*')) ++pos;
  };
  skip();
  if (text.substr(pos) == "id" || text.substr(pos, 3) == "id ") {
    pos += 2;
    skip();
    if (pos != text.size()) throw ParseError("unexpected input after 'id'", pos);
    return result;
  }
  while (true) {
    skip();
    if (pos >= text.size()) break;
    const char c = text[pos];
    FElement letter;
    switch (c) {
      case 'A':
        letter = generator_A();
        break;
      case 'B':
        letter = generator_B();
        break;
      case 'D':
        letter = element_D();
        break;
      default:
        throw ParseError(std::string("unknown generator '") + c + "'", pos);
    }
    ++pos;
    int exponent = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      const std::size_t start = pos;
      bool negative = false;
      if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) negative = text[pos++] == '-';
      if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
        throw ParseError("expected an integer exponent", pos);
      }
      long v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + (text[pos++] - '0');
        if (v > 1000000) throw ParseError("exponent too large", start);
      }
      exponent = static_cast<int>(negative ? -v : v);
    }
    result = multiply(result, power(letter, exponent));
  }
  return result;
}

std::string serialize_element(const FElement& g) {
  return serialize_tree(g.top()) + "/" + serialize_tree(g.bottom());
}

// ----------------------------------------------------------------- random

Tree random_tree(std::mt19937_64& rng, int leaves) {
  if (leaves <= 1) return Tree::leaf();
  std::uniform_int_distribution<int> split(1, leaves - 1);
  const int l = split(rng);
  Tree left = random_tree(rng, l);
  Tree right = random_tree(rng, leaves - l);
  return Tree::caret(left, right);
}

std::pair<Tree, Tree> random_tree_pair(std::mt19937_64& rng, int leaves) {
  Tree a = random_tree(rng, leaves);
  Tree b = random_tree(rng, leaves);
  return {a, b};
}

FElement random_word(std::mt19937_64& rng, int length) {
  static const FElement letters[4] = {generator_A(), generator_B(), inverse(generator_A()),
                                      inverse(generator_B())};
  std::uniform_int_distribution<int> pick(0, 3);
  FElement g;
  for (int k = 0; k < length; ++k) g = multiply(g, letters[pick(rng)]);
  return g;
}

// ---------------------------------------------------------------- PL maps

namespace {

void partition_into(const Tree& t, const mpq_class& lo, const mpq_class& hi, std::vector<mpq_class>& out) {
  if (t.is_leaf()) {
    out.push_back(lo);
    return;
  }
  mpq_class mid = (lo + hi) / 2;
  partition_into(t.left(), lo, mid, out);
  partition_into(t.right(), mid, hi, out);
}

bool is_dyadic(const mpq_class& q) {
  const mpz_class& den = q.get_den();
  return mpz_popcount(den.get_mpz_t()) == 1;
}

}  // namespace

std::vector<mpq_class> dyadic_partition(const Tree& t) {
  std::vector<mpq_class> out;
  partition_into(t, mpq_class(0), mpq_class(1), out);
  out.emplace_back(1);
  return out;
}

PLMap::PLMap() : pts_{{mpq_class(0), mpq_class(0)}, {mpq_class(1), mpq_class(1)}} {}

PLMap::PLMap(std::vector<std::pair<mpq_class, mpq_class>> breakpoints) : pts_(std::move(breakpoints)) {
  if (pts_.size() < 2 || pts_.front() != std::make_pair(mpq_class(0), mpq_class(0)) ||
      pts_.back() != std::make_pair(mpq_class(1), mpq_class(1))) {
    throw DomainError("PL map must run from (0,0) to (1,1)");
  }
  for (std::size_t k = 1; k < pts_.size(); ++k) {
    if (pts_[k].first <= pts_[k - 1].first || pts_[k].second <= pts_[k - 1].second) {
      throw DomainError("PL map breakpoints must be strictly increasing");
    }
  }
  simplify();
}

void PLMap::simplify() {
  std::vector<std::pair<mpq_class, mpq_class>> out{pts_.front()};
  for (std::size_t k = 1; k + 1 < pts_.size(); ++k) {
    const auto& a = out.back();
    const auto& b = pts_[k];
    const auto& c = pts_[k + 1];
    // keep b unless a, b, c are collinear
    if ((b.second - a.second) * (c.first - b.first) != (c.second - b.second) * (b.first - a.first)) {
      out.push_back(b);
    }
  }
  out.push_back(pts_.back());
  pts_ = std::move(out);
}

mpq_class PLMap::operator()(const mpq_class& x) const {
  if (x < 0 || x > 1) throw DomainError("PL map evaluated outside [0,1]");
  auto it = std::upper_bound(pts_.begin(), pts_.end(), x,
                             [](const mpq_class& v, const auto& p) { return v < p.first; });
  if (it == pts_.end()) return pts_.back().second;
  const auto& hi = *it;
  const auto& lo = *(it - 1);
  return lo.second + (x - lo.first) * (hi.second - lo.second) / (hi.first - lo.first);
}

PLMap PLMap::inverse() const {
  std::vector<std::pair<mpq_class, mpq_class>> inv;
  inv.reserve(pts_.size());
  for (const auto& [x, y] : pts_) inv.emplace_back(y, x);
  return PLMap(std::move(inv));
}

std::vector<mpq_class> PLMap::slopes() const {
  std::vector<mpq_class> s;
  for (std::size_t k = 1; k < pts_.size(); ++k) {
    s.push_back((pts_[k].second - pts_[k - 1].second) / (pts_[k].first - pts_[k - 1].first));
  }
  return s;
}

bool PLMap::is_thompson() const {
  for (const auto& [x, y] : pts_) {
    if (!is_dyadic(x) || !is_dyadic(y)) return false;
  }
  for (const auto& s : slopes()) {
    if (mpz_popcount(s.get_num_mpz_t()) != 1 || mpz_popcount(s.get_den_mpz_t()) != 1) return false;
  }
  return true;
}

PLMap to_pl_map(const FElement& g) {
  const auto xs = dyadic_partition(g.bottom());
  const auto ys = dyadic_partition(g.top());
  std::vector<std::pair<mpq_class, mpq_class>> pts;
  pts.reserve(xs.size());
  for (std::size_t k = 0; k < xs.size(); ++k) pts.emplace_back(xs[k], ys[k]);
  return PLMap(std::move(pts));
}

PLMap compose_pl(const PLMap& p, const PLMap& q) {
  std::vector<mpq_class> xs;
  for (const auto& [x, y] : q.breakpoints()) xs.push_back(x);
  const PLMap qinv = q.inverse();
  for (const auto& [x, y] : p.breakpoints()) xs.push_back(qinv(x));
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<std::pair<mpq_class, mpq_class>> pts;
  pts.reserve(xs.size());
  for (const auto& x : xs) pts.emplace_back(x, p(q(x)));
  return PLMap(std::move(pts));
}

}  // namespace wysiwyg
