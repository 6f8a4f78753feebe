#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "fhl/io/json.hpp"

namespace fhl::cli {

struct Output {
  io::Json json;                                  // full result (json output)
  io::Json summary;                               // flattened for csv/table; defaults to json
  std::vector<std::string> header;                // optional row table
  std::vector<std::vector<std::string>> rows;
  int status = 0;
};

enum class Format { Json, Csv, Table };

void emit(const Output& o, Format f, std::ostream& out);

// Human-readable rendering of polynomials and cyclotomic values found in JSON.
std::string readable(const io::Json& j);

}  // namespace fhl::cli
