#pragma once

#include <string>
#include <vector>

namespace cevian {

/// One output file pair: `<name>.csv` and `<name>.svg`.
struct FigurePanel {
  std::string name;
  std::string csv;
  std::string svg;
};

/// Names accepted by render_figure: fig1 ... fig11.
std::vector<std::string> figure_names();

/// Data for the named figure. Orbit figures sample `samples` points per
/// period (fig5 always uses its 17 discrete steps). Throws InvalidArgument
/// for unknown names.
std::vector<FigurePanel> render_figure(const std::string& name, std::size_t samples = 360);

}  // namespace cevian
