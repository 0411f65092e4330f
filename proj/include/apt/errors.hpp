#pragma once

#include <stdexcept>
#include <string>

namespace apt {

// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input: path strings, lexeme labels, phrase specs, config files.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Semantic problems with otherwise well-formed data: unknown lexemes,
// empty models, configuration/lexicon fingerprint mismatches.
class DataError : public Error {
 public:
  using Error::Error;
};

// Lexicon file problems: version mismatch, checksum failure, malformed records.
class LoadError : public Error {
 public:
  using Error::Error;
};

// Stream and filesystem failures.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace apt
