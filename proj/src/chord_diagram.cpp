#include "fatnielsen/chord_diagram.hpp"

#include <algorithm>
#include <sstream>

#include "fatnielsen/errors.hpp"

namespace fatnielsen {

std::vector<std::pair<int, int>> ChordDiagram::chords() const {
  std::vector<std::pair<int, int>> out;
  for (int s = 1; s <= slots(); ++s)
    if (pairing[s - 1] > s) out.emplace_back(s, pairing[s - 1]);
  return out;
}

ChordDiagram to_chord_diagram(const PolygonDomain& p) {
  return ChordDiagram{p.context(), p.pairing(), p.sides()};
}

PolygonDomain from_chord_diagram(const ChordDiagram& d) {
  if (!d.labelled())
    throw Error(ErrorKind::PreconditionViolation, "an unlabelled diagram has no polygon domain");
  return PolygonDomain(d.context, d.labels, d.pairing);
}

const char* to_string(SlideDirection d) {
  return d == SlideDirection::TowardTail ? "toward-tail" : "away-from-tail";
}

TriangleCSMove slide_move(const ChordDiagram& d, int slot, SlideDirection dir) {
  const int n = d.slots();
  if (slot < 1 || slot > n)
    throw Error(ErrorKind::InvalidSlide, "no slot " + std::to_string(slot));
  if (dir == SlideDirection::TowardTail) {
    if (slot == 1) throw Error(ErrorKind::InvalidSlide, "slot 1 has no neighbour toward the tail");
    return {slot - 1, Attach::First};
  }
  if (slot == n)
    throw Error(ErrorKind::InvalidSlide,
                "slot " + std::to_string(n) + " has no neighbour away from the tail");
  return {slot, Attach::Second};
}

ChordDiagram chord_slide(const ChordDiagram& d, int slot, SlideDirection dir) {
  const TriangleCSMove m = slide_move(d, slot, dir);
  const int neighbour = dir == SlideDirection::TowardTail ? slot - 1 : slot + 1;
  if (d.pairing[slot - 1] == neighbour)
    throw Error(ErrorKind::InvalidSlide, "neighbouring slot belongs to the same chord");
  if (d.labelled()) return to_chord_diagram(apply_move(from_chord_diagram(d), m));
  MoveLayout layout = plan_move(d.pairing, m);
  return ChordDiagram{d.context, std::move(layout.pairing), {}};
}

namespace {

// Slots run right to left so that the tail ends the core on the right.
int column(int n, int slot, int spacing, int margin) { return margin + spacing * (n - slot); }

std::vector<std::pair<int, int>> by_width(const ChordDiagram& d) {
  auto chords = d.chords();
  std::stable_sort(chords.begin(), chords.end(), [](auto a, auto b) {
    return a.second - a.first > b.second - b.first;
  });
  return chords;
}

std::string render_ascii(const ChordDiagram& d) {
  const int n = d.slots();
  const int spacing = 4, margin = 2;
  const auto chords = by_width(d);
  const int rows = static_cast<int>(chords.size());
  const int width = column(n, 1, spacing, margin) + 4;
  std::vector<std::string> grid(rows + 1, std::string(width, ' '));

  for (int r = 0; r < rows; ++r) {
    int a = column(n, chords[r].second, spacing, margin);
    int b = column(n, chords[r].first, spacing, margin);
    for (int c = a + 1; c < b; ++c) grid[r][c] = '-';
  }
  for (int r = 0; r < rows; ++r) {
    for (int slot : {chords[r].first, chords[r].second}) {
      int c = column(n, slot, spacing, margin);
      grid[r][c] = '+';
      for (int below = r + 1; below < rows; ++below) grid[below][c] = '|';
    }
  }
  std::string& core = grid[rows];
  for (int c = 0; c < width - 1; ++c) core[c] = '=';
  for (int s = 1; s <= n; ++s) core[column(n, s, spacing, margin)] = '+';
  core[width - 1] = 'o';

  std::ostringstream out;
  for (std::string line : grid) {
    line.erase(line.find_last_not_of(' ') + 1);
    out << line << '\n';
  }
  std::string numbers(width + 4, ' ');
  for (int s = 1; s <= n; ++s) {
    std::string k = std::to_string(s);
    numbers.replace(column(n, s, spacing, margin), k.size(), k);
  }
  numbers.replace(width - 1, 4, "tail");
  numbers.erase(numbers.find_last_not_of(' ') + 1);
  out << numbers << '\n';
  if (d.labelled())
    for (int s = 1; s <= n; ++s)
      out << "  " << s << ": " << d.context.format(d.labels[s - 1]) << '\n';
  return out.str();
}

std::string render_dot(const ChordDiagram& d) {
  const int n = d.slots();
  std::ostringstream out;
  out << "graph chord_diagram {\n";
  out << "  node [shape=point];\n";
  out << "  tail [shape=circle, label=\"\", width=0.12, comment=\"univalent: s1\"];\n";
  for (int s = 1; s <= n; ++s) {
    const std::string toward = s == 1 ? "tail" : "s" + std::to_string(s - 1);
    const std::string away = s == n ? "end" : "s" + std::to_string(s + 1);
    out << "  s" << s << " [xlabel=\"" << s << "\", comment=\"cyclic order: " << toward << ", "
        << away << ", s" << d.pairing[s - 1] << "\"];\n";
  }
  out << "  end [shape=point, comment=\"univalent: s" << n << "\"];\n";
  out << "  tail -- s1 [style=bold];\n";
  for (int s = 1; s < n; ++s) out << "  s" << s << " -- s" << s + 1 << " [style=bold];\n";
  out << "  s" << n << " -- end [style=bold];\n";
  for (auto [a, b] : d.chords()) {
    out << "  s" << a << " -- s" << b;
    if (d.labelled()) out << " [label=\"" << d.context.format(d.labels[a - 1]) << "\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string render_svg(const ChordDiagram& d) {
  const int n = d.slots();
  const int spacing = 60, margin = 40;
  const int core_x_end = column(n, 1, spacing, margin) + 40;
  const int height = spacing * (n - 1) / 2 + 100;
  const int core_y = height - 50;
  const int width = core_x_end + margin;

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  out << "  <line x1=\"" << margin / 2 << "\" y1=\"" << core_y << "\" x2=\"" << core_x_end
      << "\" y2=\"" << core_y << "\" stroke=\"black\" stroke-width=\"3\"/>\n";
  out << "  <circle cx=\"" << core_x_end << "\" cy=\"" << core_y
      << "\" r=\"6\" fill=\"white\" stroke=\"black\" stroke-width=\"2\"/>\n";
  out << "  <text x=\"" << core_x_end << "\" y=\"" << core_y + 24
      << "\" font-size=\"12\" text-anchor=\"middle\">tail</text>\n";
  for (auto [a, b] : d.chords()) {
    const int xa = column(n, b, spacing, margin);
    const int xb = column(n, a, spacing, margin);
    const int r = (xb - xa) / 2;
    out << "  <path d=\"M " << xa << ' ' << core_y << " A " << r << ' ' << r << " 0 0 1 " << xb
        << ' ' << core_y << "\" fill=\"none\" stroke=\"steelblue\" stroke-width=\"2\"/>\n";
  }
  for (int s = 1; s <= n; ++s) {
    const int x = column(n, s, spacing, margin);
    out << "  <circle cx=\"" << x << "\" cy=\"" << core_y << "\" r=\"3\" fill=\"black\"/>\n";
    out << "  <text x=\"" << x << "\" y=\"" << core_y + 20
        << "\" font-size=\"12\" text-anchor=\"middle\">" << s << "</text>\n";
    if (d.labelled())
      out << "  <text x=\"" << x << "\" y=\"" << core_y + 36
          << "\" font-size=\"10\" text-anchor=\"middle\">"
          << xml_escape(d.context.format(d.labels[s - 1])) << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace

std::string render(const ChordDiagram& d, std::string_view format) {
  if (format == "ascii") return render_ascii(d);
  if (format == "dot") return render_dot(d);
  if (format == "svg") return render_svg(d);
  if (format.empty()) throw Error(ErrorKind::UsageError, "no render format given");
  throw Error(ErrorKind::UsageError, "unknown render format '" + std::string(format) +
                                         "' (expected ascii, dot or svg)");
}

}  // namespace fatnielsen
