#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "doldkit/arith.hpp"
#include "doldkit/errors.hpp"
#include "doldkit/seqkit.hpp"

namespace doldkit::cli {

class MalformedLine : public ParseError {
 public:
  explicit MalformedLine(std::size_t line)
      : ParseError("malformed b-file line " + std::to_string(line), line) {}
};

class NonMonotoneIndex : public ParseError {
 public:
  explicit NonMonotoneIndex(std::size_t line)
      : ParseError("b-file index does not increase at line " + std::to_string(line), line) {}
};

/// Parsed OEIS b-file. The working window is the contiguous run of entries
/// starting at the first positive index, rebased to start at 1.
struct BFile {
  std::vector<std::pair<Int, Int>> entries;
  std::vector<Int> window;
  std::vector<std::string> notices;
};

BFile parse_bfile(const std::string& text);

/// Hex SHA-256 digest.
std::string sha256_hex(const std::string& data);

/// Runs one invocation; args excludes the program name. Returns the exit
/// code: 0 on holds or success, 1 on fails, 2 on usage or parse errors.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace doldkit::cli
