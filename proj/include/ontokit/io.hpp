#ifndef ONTOKIT_IO_HPP
#define ONTOKIT_IO_HPP

#include <string>

namespace ontokit {

// Whole file as bytes; ValidationError when it cannot be read.
std::string read_file(const std::string& path);

// Atomic replace: the content lands in a temporary sibling first and is
// renamed over the destination, so a crashed run never leaves a
// half-written file.  ValidationError when it cannot be written.
void write_file_atomic(const std::string& path, const std::string& content);

} // namespace ontokit

#endif
