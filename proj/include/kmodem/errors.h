#ifndef KMODEM_ERRORS_H
#define KMODEM_ERRORS_H

#include <stdexcept>
#include <string>

namespace kmodem {

enum class Errc {
    NotSimple,
    NotMonotone,
    DuplicateX,
    NotOrthogonal,
    LabelOutOfRange,
    OddLabel,
    PointOutsidePolygon,
    NotOnBoundary,
    TangentDirection,
    WrongSize,
    NoValidCandidate,
    ParityMismatch,
    ParallelEdges,
    TooManyVertices,
    NotStairEnd,
    EvenK,
    BadParams,
    ModemOutsidePolygon,
    WitnessOutsidePolygon,
    ZeroDirection,
    DegenerateSegment,
    Internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace kmodem

#endif
