#include "kmodem/scalar.h"

#include "kmodem/errors.h"

namespace kmodem {

Scalar scalar(long num, long den) {
    if (den == 0) fail(Errc::BadParams, "zero denominator");
    Scalar q(num, den);
    q.canonicalize();
    return q;
}

Scalar scalar_parse(std::string_view text) {
    if (text.empty()) fail(Errc::BadParams, "empty rational literal");
    std::string s(text);
    Scalar q;
    // mpq parsing accepts "p" and "p/q" in base 10.
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        fail(Errc::BadParams, "malformed rational literal '" + s + "'");
    if (sgn(Scalar(q.get_den())) == 0)
        fail(Errc::BadParams, "zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

std::string scalar_str(const Scalar& s) {
    if (s.get_den() == 1) return s.get_num().get_str();
    return s.get_num().get_str() + "/" + s.get_den().get_str();
}

double to_double(const Scalar& s) { return s.get_d(); }

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::NotSimple: return "NotSimple";
        case Errc::NotMonotone: return "NotMonotone";
        case Errc::DuplicateX: return "DuplicateX";
        case Errc::NotOrthogonal: return "NotOrthogonal";
        case Errc::LabelOutOfRange: return "LabelOutOfRange";
        case Errc::OddLabel: return "OddLabel";
        case Errc::PointOutsidePolygon: return "PointOutsidePolygon";
        case Errc::NotOnBoundary: return "NotOnBoundary";
        case Errc::TangentDirection: return "TangentDirection";
        case Errc::WrongSize: return "WrongSize";
        case Errc::NoValidCandidate: return "NoValidCandidate";
        case Errc::ParityMismatch: return "ParityMismatch";
        case Errc::ParallelEdges: return "ParallelEdges";
        case Errc::TooManyVertices: return "TooManyVertices";
        case Errc::NotStairEnd: return "NotStairEnd";
        case Errc::EvenK: return "EvenK";
        case Errc::BadParams: return "BadParams";
        case Errc::ModemOutsidePolygon: return "ModemOutsidePolygon";
        case Errc::WitnessOutsidePolygon: return "WitnessOutsidePolygon";
        case Errc::ZeroDirection: return "ZeroDirection";
        case Errc::DegenerateSegment: return "DegenerateSegment";
        case Errc::Internal: return "Internal";
    }
    return "Unknown";
}

} // namespace kmodem
