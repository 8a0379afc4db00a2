#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace meshrdh {

// Base of every error the library throws. Callers that only care about
// "something went wrong" catch this; the CLI maps subclasses to exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// OFF / sidecar parsing failures. `line` is 1-based, 0 when unknown.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line = 0)
        : Error(line ? what + " (line " + std::to_string(line) + ")" : what),
          line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class MalformedHeader : public ParseError { using ParseError::ParseError; };
class CountMismatch : public ParseError { using ParseError::ParseError; };
class BadIndex : public ParseError { using ParseError::ParseError; };
class NonTriangle : public ParseError { using ParseError::ParseError; };
class SidecarError : public ParseError { using ParseError::ParseError; };

class OutOfRange : public Error { using Error::Error; };
class DegenerateMesh : public Error { using Error::Error; };
class Overflow : public Error { using Error::Error; };
class EmptyPredictors : public Error { using Error::Error; };
class SymbolOutOfRange : public Error { using Error::Error; };
class TruncatedStream : public Error { using Error::Error; };
class EmptySet : public Error { using Error::Error; };
class VertexCountMismatch : public Error { using Error::Error; };
class KeyFormatError : public Error { using Error::Error; };
class IoError : public Error { using Error::Error; };
class MissingSidecar : public IoError { using IoError::IoError; };

class CapacityExceeded : public Error {
public:
    CapacityExceeded(std::uint64_t capacity, std::uint64_t requested)
        : Error("payload container needs " + std::to_string(requested) +
                " bits but capacity is " + std::to_string(capacity) + " bits"),
          capacity_(capacity),
          requested_(requested) {}
    std::uint64_t capacity() const noexcept { return capacity_; }
    std::uint64_t requested() const noexcept { return requested_; }

private:
    std::uint64_t capacity_;
    std::uint64_t requested_;
};

// Payload framing failed to verify: wrong data-hiding key or a damaged mesh.
class ChecksumMismatch : public Error { using Error::Error; };

// The decoded length field claims more bits than the mesh can hold. This is
// an integrity failure of the same kind, so it is catchable as a checksum
// mismatch.
class LengthOverflow : public ChecksumMismatch { using ChecksumMismatch::ChecksumMismatch; };

}  // namespace meshrdh
