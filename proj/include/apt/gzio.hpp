#pragma once

#include <string>
#include <string_view>

namespace apt {

// Deterministic gzip: fixed compression level, no name/mtime in the header,
// so identical input bytes always yield identical output bytes.
std::string gzip_compress(std::string_view data);

// Throws LoadError on corrupt or truncated streams (the gzip CRC acts as the
// file checksum).
std::string gzip_decompress(std::string_view data);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view bytes);

}  // namespace apt
