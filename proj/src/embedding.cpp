#include "starsurg/embedding.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>

#include "starsurg/errors.hpp"

namespace starsurg {

int CapEmbedding::distinct_exceptional() const {
  std::set<ExcLabel> labels;
  for (const auto& c : classes)
    for (const auto& [label, coeff] : c.exceptional_part()) labels.insert(label);
  return static_cast<int>(labels.size());
}

namespace {

// Sort key of one coefficient: nonzero entries first, then by value.
std::pair<int, Integer> entry_key(const Integer& c) { return {c == 0 ? 1 : 0, c}; }

}  // namespace

CapEmbedding canonical_relabel(const CapEmbedding& emb) {
  std::set<ExcLabel> labels;
  for (const auto& c : emb.classes)
    for (const auto& [label, coeff] : c.exceptional_part()) labels.insert(label);

  using Column = std::vector<std::pair<int, Integer>>;
  std::vector<Column> columns;
  columns.reserve(labels.size());
  for (const auto& label : labels) {
    Column col;
    col.reserve(emb.classes.size());
    for (const auto& c : emb.classes) col.push_back(entry_key(c.coefficient(label)));
    columns.push_back(std::move(col));
  }
  std::sort(columns.begin(), columns.end());

  CapEmbedding out;
  out.classes.reserve(emb.classes.size());
  for (std::size_t row = 0; row < emb.classes.size(); ++row) {
    LatticeClass c(emb.classes[row].h());
    for (std::size_t k = 0; k < columns.size(); ++k)
      if (columns[k][row].first == 0) c.set_coefficient(ExcLabel(static_cast<int>(k) + 1), columns[k][row].second);
    out.classes.push_back(std::move(c));
  }
  return out;
}

bool label_equivalent(const CapEmbedding& x, const CapEmbedding& y) {
  if (x.classes.size() != y.classes.size()) return false;
  return canonical_relabel(x) == canonical_relabel(y);
}

std::string format_embedding(const StarPlumbing& cap, const CapEmbedding& emb) {
  const auto verts = cap.vertices();
  if (verts.size() != emb.classes.size()) throw DomainError("embedding size does not match the cap");
  std::ostringstream os;
  for (std::size_t i = 0; i < verts.size(); ++i)
    os << verts[i].to_string() << ": " << emb.classes[i].to_string() << "\n";
  return os.str();
}

CapEmbedding parse_embedding(const StarPlumbing& cap, std::string_view text) {
  CapEmbedding emb;
  emb.classes.resize(cap.vertex_count());
  std::vector<bool> seen(cap.vertex_count(), false);
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    int arm = 0, depth = 0;
    char tail = 0;
    auto colon = line.find(':');
    if (colon == std::string::npos ||
        std::sscanf(line.c_str(), " vertex(%d,%d%c", &arm, &depth, &tail) != 3 || tail != ')')
      throw ParseError("expected 'vertex(arm,depth): class'", line_no);
    int idx;
    try {
      idx = cap.index_of({arm, depth});
    } catch (const DomainError& e) {
      throw ParseError(e.what(), line_no);
    }
    try {
      emb.classes[idx] = parse_lattice_class(std::string_view(line).substr(colon + 1));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no);
    }
    seen[idx] = true;
  }
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (!seen[i]) throw ParseError("missing class for " + cap.vertices()[i].to_string());
  return emb;
}

}  // namespace starsurg
