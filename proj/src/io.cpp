#include "qspp/io.hpp"

#include <fstream>
#include <iterator>
#include <sstream>
#include <vector>

#include "qspp/errors.hpp"

namespace qspp {
namespace {

class TokenReader {
 public:
  explicit TokenReader(std::string_view text) {
    std::istringstream lines{std::string(text)};
    for (std::string line; std::getline(lines, line);) {
      const auto first = line.find_first_not_of(" \t\r");
      if (first != std::string::npos && line[first] == '#') continue;
      std::istringstream words(line);
      for (std::string w; words >> w;) tokens_.push_back(std::move(w));
    }
  }

  std::size_t position() const { return pos_; }
  bool done() const { return pos_ >= tokens_.size(); }

  const std::string& next(std::string_view what) {
    if (done()) throw ParseError("unexpected end of input, expected " + std::string(what), pos_);
    return tokens_[pos_++];
  }

  void expect(std::string_view keyword) {
    const std::string& tok = next(keyword);
    if (tok != keyword) {
      throw ParseError("expected '" + std::string(keyword) + "', got '" + tok + "'", pos_ - 1);
    }
  }

  long long integer(std::string_view what, long long lo, long long hi) {
    const std::string& tok = next(what);
    std::size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || used == 0) {
      throw ParseError("expected an integer " + std::string(what) + ", got '" + tok + "'", pos_ - 1);
    }
    if (value < lo || value > hi) {
      throw ParseError(std::string(what) + " out of range: " + tok, pos_ - 1);
    }
    return value;
  }

  Rational rational(std::string_view what) {
    const std::string& tok = next(what);
    try {
      return parse_rational(tok);
    } catch (const std::invalid_argument&) {
      throw ParseError("expected a rational " + std::string(what) + ", got '" + tok + "'", pos_ - 1);
    }
  }

  int keyed(std::string_view key, long long lo, long long hi) {
    expect(key);
    return static_cast<int>(integer(key, lo, hi));
  }

 private:
  std::vector<std::string> tokens_;
  std::size_t pos_ = 0;
};

constexpr long long kMaxSize = 1'000'000;

}  // namespace

std::string format_cost_vector(const CostVector& c) {
  std::string out = "c\n";
  for (Eigen::Index e = 0; e < c.size(); ++e) {
    if (e > 0) out += ' ';
    out += to_string(c(e));
  }
  out += '\n';
  return out;
}

std::string write_instance(const QsppInstance& inst) {
  std::ostringstream out;
  const Digraph& g = inst.graph;
  const int m = g.arc_count();
  out << "QSPP 1\n";
  out << "n " << g.vertex_count() << "\nm " << m << "\ns " << inst.s.index << "\nt "
      << inst.t.index << "\n";
  for (int e = 0; e < m; ++e) {
    const Arc& a = g.arc({e});
    out << "arc " << e << ' ' << a.head.index << ' ' << a.tail.index << '\n';
  }
  out << format_cost_vector(inst.c);
  if (is_symmetric(inst.q) && (inst.q.diagonal().array() == Rational(0)).all()) {
    std::vector<std::string> lines;
    for (int e = 0; e < m; ++e) {
      for (int f = e + 1; f < m; ++f) {
        if (inst.q(e, f) != 0) {
          lines.push_back(std::to_string(e) + ' ' + std::to_string(f) + ' ' +
                          to_string(inst.q(e, f)));
        }
      }
    }
    out << "Q sparse " << lines.size() << '\n';
    for (const std::string& line : lines) out << line << '\n';
  } else {
    out << "Q dense\n";
    for (int e = 0; e < m; ++e) {
      for (int f = 0; f < m; ++f) out << (f > 0 ? " " : "") << to_string(inst.q(e, f));
      out << '\n';
    }
  }
  return out.str();
}

QsppInstance read_instance(std::string_view text) {
  TokenReader in(text);
  in.expect("QSPP");
  const std::size_t version_pos = in.position();
  if (in.integer("format version", 0, kMaxSize) != 1) {
    throw ParseError("unsupported format version", version_pos);
  }
  const int n = in.keyed("n", 1, kMaxSize);
  const int m = in.keyed("m", 0, kMaxSize);
  const int s = in.keyed("s", 0, n - 1);
  const int t = in.keyed("t", 0, n - 1);
  if (s == t) throw ParseError("source and target coincide", in.position() - 1);

  std::vector<Arc> arcs;
  arcs.reserve(m);
  for (int e = 0; e < m; ++e) {
    in.expect("arc");
    const std::size_t id_pos = in.position();
    if (in.integer("arc id", 0, m - 1) != e) throw ParseError("arc ids must be 0 .. m-1 in order", id_pos);
    const int head = static_cast<int>(in.integer("arc head", 0, n - 1));
    const int tail = static_cast<int>(in.integer("arc tail", 0, n - 1));
    if (head == tail) throw ParseError("self-loop", in.position() - 1);
    arcs.push_back({{head}, {tail}, {}});
  }

  in.expect("c");
  CostVector c(m);
  for (int e = 0; e < m; ++e) c(e) = in.rational("linear cost");

  in.expect("Q");
  const std::size_t kind_pos = in.position();
  const std::string kind = in.next("'sparse' or 'dense'");
  InteractionMatrix q = InteractionMatrix::Zero(m, m);
  if (kind == "sparse") {
    const long long k = in.integer("entry count", 0, kMaxSize);
    for (long long n_entry = 0; n_entry < k; ++n_entry) {
      const std::size_t entry_pos = in.position();
      const int e = static_cast<int>(in.integer("arc index", 0, m - 1));
      const int f = static_cast<int>(in.integer("arc index", 0, m - 1));
      if (e == f) throw ParseError("sparse Q entries must be off-diagonal", entry_pos);
      Rational v = in.rational("interaction cost");
      if (q(e, f) != 0 && q(e, f) != v) {
        throw ParseError("conflicting entries for one arc pair", entry_pos);
      }
      q(e, f) = v;
      q(f, e) = v;
    }
  } else if (kind == "dense") {
    for (int e = 0; e < m; ++e) {
      for (int f = 0; f < m; ++f) q(e, f) = in.rational("interaction cost");
    }
  } else {
    throw ParseError("expected 'sparse' or 'dense', got '" + kind + "'", kind_pos);
  }
  if (!in.done()) throw ParseError("trailing input", in.position());
  return QsppInstance(Digraph(n, std::move(arcs)), {s}, {t}, std::move(c), std::move(q));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

}  // namespace qspp
