#include "dichro/dot.hpp"

#include <sstream>

#include "dichro/errors.hpp"

namespace dichro {

namespace {

std::string cluster_name(const std::vector<unsigned>& prefix) {
  std::string out = "cluster";
  for (unsigned a : prefix) out += '_' + std::to_string(a);
  return out;
}

std::string vertex_label(const Params& p, Code v) {
  std::string out;
  for (unsigned i = 0; i < p.d(); ++i) {
    if (i) out += ',';
    out += std::to_string(p.coord(v, i));
  }
  return out;
}

class DotWriter {
 public:
  DotWriter(const Params& p, const DotOptions& opts)
      : p_(p), opts_(opts), per_vertex_(p.vertex_count() <= opts.vertex_limit) {}

  std::string run() {
    out_ << "digraph D {\n";
    out_ << "  compound=true;\n";
    out_ << "  label=\"D(" << p_.n() << "," << p_.d() << ")\";\n";
    out_ << "  node [shape=circle, fontsize=10];\n";
    std::vector<unsigned> prefix;
    emit_block(prefix, 1);
    emit_bundles(prefix);
    if (per_vertex_) emit_inner_edges();
    out_ << "}\n";
    return out_.str();
  }

 private:
  // First vertex of the block, or its placeholder node.
  std::string anchor(const std::vector<unsigned>& prefix) const {
    if (per_vertex_) {
      return "v" + std::to_string(block_interval(p_, BlockPrefix(prefix)).begin);
    }
    std::vector<unsigned> inner = prefix;
    inner.resize(opts_.depth, 0);
    return "b" + cluster_name(inner).substr(7);
  }

  void indent(std::size_t level) {
    for (std::size_t i = 0; i < level; ++i) out_ << "  ";
  }

  void emit_block(std::vector<unsigned>& prefix, std::size_t level) {
    if (prefix.size() == opts_.depth) {
      const Interval iv = block_interval(p_, BlockPrefix(prefix));
      if (per_vertex_) {
        for (Code v = iv.begin; v < iv.end; ++v) {
          indent(level);
          out_ << "v" << v << " [label=\"" << vertex_label(p_, v) << "\"];\n";
        }
      } else {
        indent(level);
        out_ << anchor(prefix) << " [shape=box, label=\"" << iv.size() << " vertices\"];\n";
      }
      return;
    }
    for (unsigned k = 0; k < p_.n(); ++k) {
      prefix.push_back(k);
      indent(level);
      out_ << "subgraph " << cluster_name(prefix) << " {\n";
      indent(level + 1);
      out_ << "label=\"" << to_string(BlockPrefix(prefix)) << "\";\n";
      emit_block(prefix, level + 1);
      indent(level);
      out_ << "}\n";
      prefix.pop_back();
    }
  }

  void emit_bundles(std::vector<unsigned>& prefix) {
    if (prefix.size() >= opts_.depth) return;
    for (unsigned k = 0; k < p_.n(); ++k) {
      std::vector<unsigned> from = prefix, to = prefix;
      from.push_back(k);
      to.push_back((k + 1) % p_.n());
      out_ << "  " << anchor(from) << " -> " << anchor(to) << " [ltail=" << cluster_name(from)
           << ", lhead=" << cluster_name(to) << ", penwidth=2];\n";
    }
    for (unsigned k = 0; k < p_.n(); ++k) {
      prefix.push_back(k);
      emit_bundles(prefix);
      prefix.pop_back();
    }
  }

  // Edges whose first difference lies below the clustering depth.
  void emit_inner_edges() {
    for (Code u = 0; u < p_.vertex_count(); ++u) {
      for_each_successor(p_, u, [&](Code v) {
        unsigned xi = 0;
        while (p_.coord(u, xi) == p_.coord(v, xi)) ++xi;
        if (xi >= opts_.depth) out_ << "  v" << u << " -> v" << v << ";\n";
      });
    }
  }

  const Params& p_;
  const DotOptions& opts_;
  bool per_vertex_;
  std::ostringstream out_;
};

}  // namespace

std::string export_dot(const Params& p, const DotOptions& opts) {
  if (opts.depth > p.d()) {
    throw InvalidArgument("cluster depth " + std::to_string(opts.depth) + " exceeds d=" +
                          std::to_string(p.d()));
  }
  if (p.power(opts.depth) > opts.cluster_limit) {
    throw CapExceeded("depth " + std::to_string(opts.depth) + " would draw " +
                      std::to_string(p.power(opts.depth)) + " clusters, above the limit of " +
                      std::to_string(opts.cluster_limit));
  }
  return DotWriter(p, opts).run();
}

}  // namespace dichro
