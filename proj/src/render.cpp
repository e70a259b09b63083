#include "supernomial/render.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace supernomial::render {

namespace {

using Label = std::function<std::string(int row, int col)>;
using Group = std::function<int(int row, int col)>;  // -1: no grouping
using Note = std::function<std::string(int row)>;

std::string centered(const std::string& text) {
  if (text.size() >= 3)
    return text.substr(0, 3);
  if (text.size() == 2)
    return text + " ";
  if (text.size() == 1)
    return " " + text + " ";
  return "   ";
}

Block grid(const Partition& shape, const Label& label, const Group& group = {},
           const Note& note = {}) {
  if (shape.empty())
    return {"."};
  int rows = shape.length();
  int cols = shape.row(1);
  Block out(2 * rows + 1, std::string(4 * cols + 1, ' '));
  auto top = [&](int r) { return 2 * (rows - r); };
  auto same = [&](int r1, int c1, int r2, int c2) {
    return group && group(r1, c1) >= 0 && group(r1, c1) == group(r2, c2);
  };
  for (int r = 1; r <= rows; ++r)
    for (int c = 1; c <= shape.row(r); ++c) {
      int y = top(r);
      int x = 4 * (c - 1);
      for (int dy : {0, 2})
        for (int dx = 0; dx <= 4; ++dx)
          out[y + dy][x + dx] = (dx % 4 == 0) ? '+' : '-';
      out[y + 1][x] = out[y + 1][x + 4] = '|';
      out[y + 1].replace(x + 1, 3, centered(label ? label(r, c) : ""));
    }
  for (int r = 1; r <= rows; ++r)
    for (int c = 1; c <= shape.row(r); ++c) {
      int y = top(r);
      int x = 4 * (c - 1);
      if (c < shape.row(r) && same(r, c, r, c + 1))
        out[y + 1][x + 4] = ' ';
      if (r < rows && c <= shape.row(r + 1) && same(r, c, r + 1, c))
        out[y].replace(x + 1, 3, "   ");
    }
  if (note)
    for (int r = 1; r <= rows; ++r) {
      std::string text = note(r);
      if (!text.empty()) {
        std::string& line = out[top(r) + 1];
        line.resize(4 * shape.row(r) + 1, ' ');
        line += " " + text;
      }
    }
  return out;
}

Block with_caption(Block block, const std::string& caption) {
  block.push_back(caption);
  return block;
}

Block state_partition(const RiggedState& s, int a) {
  Partition shape = s.nu(a);
  if (a == s.alphabet())
    return grid(shape, {});
  auto first_label_col = [&](int i) {
    int m = static_cast<int>(s.labels(a, i).size());
    // Symmetric labels sit in the top box of each column whose height is i;
    // antisymmetric labels fill the last boxes of row i.
    return s.mode() == Mode::symmetric ? s.part(a, i + 1) + 1 : s.part(a, i) - m + 1;
  };
  Label label = [&](int r, int c) -> std::string {
    const auto& labels = s.labels(a, r);
    int k = c - first_label_col(r);
    if (k < 0 || k >= static_cast<int>(labels.size()))
      return "";
    return std::to_string(labels[k]);
  };
  Note note = [&](int r) -> std::string {
    if (s.labels(a, r).empty())
      return "";
    return std::to_string(s.vacancy(a, r));
  };
  return grid(shape, label, {}, note);
}

} // namespace

Block beside(const std::vector<Block>& blocks, int gap) {
  std::size_t height = 0;
  for (const auto& b : blocks)
    height = std::max(height, b.size());
  Block out(height);
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const Block& b = blocks[k];
    std::size_t width = 0;
    for (const auto& line : b)
      width = std::max(width, line.size());
    std::size_t offset = height - b.size();
    for (std::size_t y = 0; y < height; ++y) {
      std::string piece = y >= offset ? b[y - offset] : "";
      piece.resize(width, ' ');
      out[y] += piece;
      if (k + 1 < blocks.size())
        out[y] += std::string(gap, ' ');
    }
  }
  for (auto& line : out)
    while (!line.empty() && line.back() == ' ')
      line.pop_back();
  return out;
}

std::string str(const Block& block) {
  std::string out;
  for (const auto& line : block) {
    auto end = line.find_last_not_of(' ');
    out += (end == std::string::npos ? std::string() : line.substr(0, end + 1)) + "\n";
  }
  return out;
}

Block diagram(const Partition& shape) { return grid(shape, {}); }

Block tableau(const MultiTableau& t) {
  std::vector<Block> parts;
  auto fillings = t.fillings();
  for (int p = 0; p < t.components(); ++p) {
    const Filling& f = fillings[p];
    parts.push_back(grid(t.shape()[p], [&](int r, int c) {
      int v = f[r - 1][c - 1];
      return v == 0 ? std::string("*") : std::to_string(v);
    }));
  }
  return beside(parts);
}

Block ribbon_tableau(const RibbonTableau& t) {
  std::map<std::pair<int, int>, int> ribbon_of;
  std::map<std::pair<int, int>, int> letter_at;
  int id = 0;
  for (std::size_t step = 0; step < t.strips().size(); ++step)
    for (const auto& ribbon : t.strips()[step]) {
      for (const auto& cell : ribbon.cells)
        ribbon_of[{cell.row, cell.col}] = id;
      letter_at[{ribbon.origin.row, ribbon.origin.col}] = static_cast<int>(step) + 1;
      ++id;
    }
  const Partition& inner = t.chain().front();
  return grid(
      t.chain().back(),
      [&](int r, int c) -> std::string {
        if (inner.row(r) >= c)
          return "*";
        auto it = letter_at.find({r, c});
        return it == letter_at.end() ? "" : std::to_string(it->second);
      },
      [&](int r, int c) {
        auto it = ribbon_of.find({r, c});
        return it == ribbon_of.end() ? -1 : it->second;
      });
}

Block state(const RiggedState& s) {
  std::vector<Block> parts;
  for (int a = 1; a <= s.alphabet(); ++a)
    parts.push_back(state_partition(s, a));
  return beside(parts);
}

Block rigged(const RiggedConfiguration& rc) {
  RiggedState s(rc);
  std::vector<Block> parts;
  for (int a = 1; a < s.alphabet(); ++a)
    parts.push_back(with_caption(state_partition(s, a), "nu(" + std::to_string(a) + ")"));
  if (parts.empty())
    return {"(no interior partitions)"};
  return beside(parts);
}

Block trace(const BijectionTrace& tr) {
  Block out;
  for (const auto& stage : tr.stages) {
    Block line = beside({state(stage.state),
                         {"letter " + std::to_string(stage.letter) + " at component " +
                          std::to_string(stage.component) + ", position " +
                          std::to_string(stage.index)}},
                        4);
    out.insert(out.end(), line.begin(), line.end());
    out.push_back("");
  }
  if (out.empty())
    out.push_back("(no stages)");
  return out;
}

} // namespace supernomial::render
