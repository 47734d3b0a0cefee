#include "lulu/plot.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lulu {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 400.0;
constexpr double kMargin = 40.0;

struct Frame {
  double x0, x1, y0, y1;

  double px(double x) const {
    return kMargin + (x - x0) / (x1 - x0) * (kWidth - 2 * kMargin);
  }
  double py(double y) const {
    return kHeight - kMargin - (y - y0) / (y1 - y0) * (kHeight - 2 * kMargin);
  }
};

void range(const PiecewiseLinear& f, double& lo, double& hi) {
  for (const Breakpoint& b : f.nodes()) {
    lo = std::min({lo, b.left, b.value, b.right});
    hi = std::max({hi, b.left, b.value, b.right});
  }
}

std::string points(const PiecewiseLinear& f, const Frame& fr) {
  std::ostringstream os;
  os.precision(6);
  os << std::fixed;
  auto put = [&](double x, double y) {
    os << fr.px(x) << ',' << fr.py(y) << ' ';
  };
  for (const Breakpoint& b : f.nodes()) {
    put(b.x, b.left);
    put(b.x, b.value);
    put(b.x, b.right);
  }
  return os.str();
}

std::string escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const PiecewiseLinear& input,
                       const PiecewiseLinear& output, std::string_view title) {
  double lo = input[0].value;
  double hi = lo;
  range(input, lo, hi);
  range(output, lo, hi);
  if (hi - lo < 1e-12) {
    lo -= 1.0;
    hi += 1.0;
  }
  const double pad = 0.05 * (hi - lo);
  const Frame fr{std::min(input.domain().lo(), output.domain().lo()),
                 std::max(input.domain().hi(), output.domain().hi()),
                 lo - pad, hi + pad};

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
        "width=\"800\" height=\"400\" viewBox=\"0 0 800 400\">\n"
     << "  <rect x=\"0\" y=\"0\" width=\"800\" height=\"400\" fill=\"white\"/>\n";
  if (!title.empty()) {
    os << "  <title>" << escape(title) << "</title>\n"
       << "  <text x=\"400\" y=\"24\" text-anchor=\"middle\" "
          "font-family=\"sans-serif\" font-size=\"14\">"
       << escape(title) << "</text>\n";
  }
  os << "  <g id=\"axes\" stroke=\"#999\" stroke-width=\"1\">\n"
     << "    <line x1=\"" << kMargin << "\" y1=\"" << kHeight - kMargin
     << "\" x2=\"" << kWidth - kMargin << "\" y2=\"" << kHeight - kMargin
     << "\"/>\n"
     << "    <line x1=\"" << kMargin << "\" y1=\"" << kMargin << "\" x2=\""
     << kMargin << "\" y2=\"" << kHeight - kMargin << "\"/>\n"
     << "  </g>\n"
     << "  <polyline id=\"input\" fill=\"none\" stroke=\"#555\" "
        "stroke-width=\"1.5\" stroke-dasharray=\"2,3\" points=\""
     << points(input, fr) << "\"/>\n"
     << "  <polyline id=\"output\" fill=\"none\" stroke=\"black\" "
        "stroke-width=\"2\" points=\""
     << points(output, fr) << "\"/>\n"
     << "</svg>\n";
  return os.str();
}

std::string sample_curves_csv(const PiecewiseLinear& input,
                              const PiecewiseLinear& output, int samples) {
  if (samples < 2) throw std::invalid_argument("need at least 2 samples");
  if (!(input.domain() == output.domain())) {
    throw std::invalid_argument("input and output domains differ");
  }
  const Domain d = input.domain();
  std::ostringstream os;
  os.precision(17);
  os << "x,input,output\n";
  for (int i = 0; i < samples; ++i) {
    const double x =
        i + 1 == samples ? d.hi() : d.lo() + d.span() * i / (samples - 1);
    os << x << ',' << input(x) << ',' << output(x) << '\n';
  }
  return os.str();
}

}  // namespace lulu
