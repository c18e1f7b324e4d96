#include "braids/svg.hpp"

#include <cstdlib>
#include <sstream>

namespace braids {

namespace {

constexpr int kColWidth = 40;
constexpr int kRowHeight = 40;
constexpr int kMargin = 20;

double col_x(int c) { return kMargin + c * kColWidth; }
double row_y(int r) { return kMargin + r * kRowHeight; }

void line(std::ostringstream& os, double x1, double y1, double x2, double y2) {
  os << "  <line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2 << "\"/>\n";
}

}  // namespace

std::string render_svg(const BraidWord& w) {
  const int m = w.strands;
  const int rows = static_cast<int>(w.letters.size());
  const double width = 2 * kMargin + (m - 1) * kColWidth;
  const double height = 2 * kMargin + rows * kRowHeight;

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  os << " <g stroke=\"black\" stroke-width=\"2\" fill=\"none\" stroke-linecap=\"round\">\n";

  for (int r = 0; r < rows; ++r) {
    const int letter = w.letters[r];
    const int c = std::abs(letter) - 1;  // 0-based left column of the crossing
    const double yt = row_y(r), yb = row_y(r + 1);
    for (int s = 0; s < m; ++s)
      if (s != c && s != c + 1) line(os, col_x(s), yt, col_x(s), yb);
    // Positive: the strand moving from column c+1 to column c passes over.
    const double xl = col_x(c), xr = col_x(c + 1);
    const double gx1 = xl + 0.35 * kColWidth, gy1 = yt + 0.35 * kRowHeight;
    const double gx2 = xr - 0.35 * kColWidth, gy2 = yt + 0.65 * kRowHeight;
    os << "  <!-- crossing " << (letter > 0 ? "+" : "-") << (c + 1) << " -->\n";
    if (letter > 0) {
      line(os, xr, yt, xl, yb);  // over-strand, right to left
      line(os, xl, yt, gx1, gy1);  // under-strand with a central gap
      line(os, gx2, gy2, xr, yb);
    } else {
      line(os, xl, yt, xr, yb);  // over-strand, left to right
      line(os, xr, yt, gx2, gy1);
      line(os, gx1, gy2, xl, yb);
    }
  }
  if (rows == 0)
    for (int s = 0; s < m; ++s) line(os, col_x(s), row_y(0), col_x(s), row_y(1));

  os << " </g>\n</svg>\n";
  return os.str();
}

}  // namespace braids
