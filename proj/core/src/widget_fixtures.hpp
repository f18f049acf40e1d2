#pragma once

#include <map>
#include <string>

namespace antlab::detail {

/// File name -> contents of the widget fixture directory, compiled in at build time.
const std::map<std::string, std::string>& embedded_widget_files();

}  // namespace antlab::detail
