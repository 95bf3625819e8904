#ifndef RSG_SWEEP_HPP
#define RSG_SWEEP_HPP

#include "rsg/bitangent.hpp"
#include "rsg/execution.hpp"
#include "rsg/graphic.hpp"

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rsg {

enum class EventKind { DefiniteInflection, IndefiniteInflection, CuspTypeOne, CuspTypeTwo, DoubleTangency };
std::string_view to_string(EventKind k);

/// Whether the kind table lets an event of this kind change the genus.
bool changes_genus(EventKind k);

struct EventLocation {
    SegmentRef segment;
    double s = 0.0;
    std::optional<VertexRef> vertex;
    Point point;
};

struct Event {
    double angle = 0.0;
    EventKind kind = EventKind::DoubleTangency;
    std::vector<EventLocation> locations;
    int genus_delta = 0;
};

/// A horizontal tangency of the graphic rotated by some angle, i.e. a
/// critical point of the projected function, with its Morse index.
struct CriticalPoint {
    SegmentRef segment;
    double s = 0.0;
    Point point;
    double height = 0.0;
    int index = 0;
};

struct CriticalCensus {
    std::array<int, 4> counts{};

    int operator[](int index) const { return counts[static_cast<std::size_t>(index)]; }
    int euler() const { return counts[0] - counts[1] + counts[2] - counts[3]; }
    int total() const { return counts[0] + counts[1] + counts[2] + counts[3]; }
    friend bool operator==(const CriticalCensus&, const CriticalCensus&) = default;
};

/// Index of a tangency on an edge. Definite: sheet above and minimum -> 0,
/// above/maximum -> 1, below/minimum -> 2, below/maximum -> 3. Indefinite:
/// minimum -> 1, maximum -> 2.
int morse_index(FoldType fold, bool sheet_above, bool minimum);

/// Critical points at angle t sorted by height. Throws Error(EventAngle) if a
/// tangency is degenerate or two share a level.
std::vector<CriticalPoint> critical_points(const Graphic& g, double t);
CriticalCensus critical_census(const Graphic& g, double t);

/// Census at many angles; the parallel kernel splits the angle list.
std::vector<CriticalCensus> critical_census_batch(const Graphic& g, std::span<const double> angles,
                                                  Execution execution = Execution::Parallel);

/// n1 - n0 + 1; throws Error(NegativeGenus) below zero.
int genus_from_census(const CriticalCensus& c);
int genus_at(const Graphic& g, double t);

/// Located but unclassified non-Morse angle.
struct EventCandidate {
    double angle = 0.0;
    EventKind kind = EventKind::DoubleTangency;
    std::vector<EventLocation> locations;
};

/// Every negative-slope inflection, cusp tangent and doubly tangent line,
/// sorted by angle then location.
std::vector<EventCandidate> event_candidates(const Graphic& g, Execution execution = Execution::Parallel);

/// Sets genus_delta from the census difference at angle +- delta and
/// cross-checks it against the kind table.
/// Throws Error(ClassificationMismatch) on disagreement.
Event classify_event(const Graphic& g, const EventCandidate& candidate, double delta);

struct Schedule {
    std::vector<Event> events;
    /// Ties closer than tol::event between consecutive event angles.
    std::vector<std::string> warnings;
    /// Offset used on both sides of each event when differencing censuses.
    double delta = 0.0;
};
Schedule event_schedule(const Graphic& g, Execution execution = Execution::Parallel);

struct Trajectory {
    std::vector<double> breakpoints;
    /// One genus per open interval, (0, t1) first and (tn, pi/2) last.
    std::vector<int> genera;

    int q() const { return genera.front(); }
    int p() const { return genera.back(); }
    int peak() const;
};

/// Genera at interval midpoints; steps must equal the events' deltas.
Trajectory genus_trajectory(const Graphic& g, const Schedule& schedule);
Trajectory genus_trajectory(const Graphic& g);

/// Negative-slope inflections on indefinite edges plus negative-slope type
/// two cusps.
int count_c(const Graphic& g);

struct BoundCertificate {
    int p = 0;
    int q = 0;
    int c = 0;
    int peak = 0;
    /// (p + q + c) / 2, an integer once parity holds.
    int bound = 0;
};

/// Checks c = p + q (mod 2), c >= |p - q| and peak <= (p + q + c)/2.
/// Throws Error(ParityViolation), Error(GapViolation) or
/// Error(PeakExceedsBound).
BoundCertificate stable_genus_bound(const Trajectory& trajectory, int c);
BoundCertificate stable_genus_bound(const Graphic& g);

/// Everything the sweep reports for one graphic.
struct SweepAnalysis {
    Schedule schedule;
    Trajectory trajectory;
    BoundCertificate bound;
};
SweepAnalysis analyze(const Graphic& g, Execution execution = Execution::Parallel);

} // namespace rsg

#endif
