#pragma once

#include <stdexcept>

namespace altpresence {

// Base class for every error this library raises on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Stream could not be opened, header row missing/unparseable, broken CSV framing.
struct IoError : Error {
    using Error::Error;
};

// DOI cannot be brought into canonical "10.<registrant>/<suffix>" form.
struct MalformedDoi : Error {
    using Error::Error;
};

// Row-level data violation during ingestion (strict mode only; lenient skips).
struct IngestError : Error {
    using Error::Error;
};

// A row references a publication or topic that does not exist.
struct ReferentialIntegrityError : IngestError {
    using IngestError::IngestError;
};

// An indicator or ranking was requested over an empty publication/topic set.
struct EmptySetError : Error {
    using Error::Error;
};

// Aggregate counts contradict each other (covered > total, events < covered).
struct InconsistentAggregates : Error {
    using Error::Error;
};

// Correlation input unusable: length mismatch, fewer than two points, or a
// constant sequence.
struct DegenerateInput : Error {
    using Error::Error;
};

// Paired sequences of different length where equal length is required.
struct LengthMismatch : Error {
    using Error::Error;
};

// Generator configuration violates its invariants.
struct InvalidConfig : Error {
    using Error::Error;
};

}  // namespace altpresence
