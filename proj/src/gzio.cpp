#include "apt/gzio.hpp"

#include <zlib.h>

#include <cstring>
#include <fstream>
#include <sstream>

#include "apt/errors.hpp"

namespace apt {

namespace {
constexpr int kGzipWindowBits = 15 + 16;  // gzip wrapper
constexpr int kAutoWindowBits = 15 + 32;  // auto-detect gzip/zlib on read
constexpr std::size_t kChunk = 64 * 1024;
}  // namespace

std::string gzip_compress(std::string_view data) {
  z_stream zs;
  std::memset(&zs, 0, sizeof(zs));
  if (deflateInit2(&zs, Z_BEST_COMPRESSION, Z_DEFLATED, kGzipWindowBits, 8,
                   Z_DEFAULT_STRATEGY) != Z_OK) {
    throw IoError("deflateInit2 failed");
  }
  // With no explicit gz_header zlib writes mtime=0 and no file name, which
  // keeps the output a pure function of the input bytes.
  std::string out;
  char buf[kChunk];
  zs.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(data.data()));
  zs.avail_in = static_cast<uInt>(data.size());
  int ret;
  do {
    zs.next_out = reinterpret_cast<Bytef*>(buf);
    zs.avail_out = kChunk;
    ret = deflate(&zs, Z_FINISH);
    if (ret != Z_OK && ret != Z_STREAM_END) {
      deflateEnd(&zs);
      throw IoError("deflate failed with code " + std::to_string(ret));
    }
    out.append(buf, kChunk - zs.avail_out);
  } while (ret != Z_STREAM_END);
  deflateEnd(&zs);
  return out;
}

std::string gzip_decompress(std::string_view data) {
  z_stream zs;
  std::memset(&zs, 0, sizeof(zs));
  if (inflateInit2(&zs, kAutoWindowBits) != Z_OK) {
    throw IoError("inflateInit2 failed");
  }
  std::string out;
  char buf[kChunk];
  zs.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(data.data()));
  zs.avail_in = static_cast<uInt>(data.size());
  int ret = Z_OK;
  while (ret != Z_STREAM_END) {
    zs.next_out = reinterpret_cast<Bytef*>(buf);
    zs.avail_out = kChunk;
    ret = inflate(&zs, Z_NO_FLUSH);
    if (ret == Z_STREAM_END || ret == Z_OK) {
      out.append(buf, kChunk - zs.avail_out);
      if (ret == Z_OK && zs.avail_in == 0 && zs.avail_out != 0) {
        inflateEnd(&zs);
        throw LoadError("truncated gzip stream");
      }
    } else {
      inflateEnd(&zs);
      // Z_DATA_ERROR covers both garbage and CRC mismatches.
      throw LoadError(std::string("corrupt gzip stream: ") +
                      (zs.msg ? zs.msg : ("code " + std::to_string(ret))));
    }
  }
  inflateEnd(&zs);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("failed reading '" + path + "'");
  return std::move(ss).str();
}

void write_file(const std::string& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  out.flush();
  if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace apt
