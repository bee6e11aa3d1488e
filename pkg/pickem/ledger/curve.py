from pickem.exceptions import EmptyCurveError
from pickem.models.ledger import PeakBeforeEnd, TroughToPeak, WinningsCurve


def trough_to_peak(curve: WinningsCurve) -> TroughToPeak:
    """Best gain available by starting to bet at the season's lowest point."""
    if not curve.points:
        raise EmptyCurveError("trough-to-peak needs a non-empty curve")

    values = curve.values

    # min/max return the first extreme, ties resolve to the earliest date
    trough_idx = min(range(len(values)), key=values.__getitem__)
    peak_idx = max(range(trough_idx, len(values)), key=values.__getitem__)

    trough, peak = curve[trough_idx], curve[peak_idx]

    return TroughToPeak(
        trough=trough,
        peak=peak,
        gain=peak.cumulative - trough.cumulative,
    )


def peak_before_end(curve: WinningsCurve) -> PeakBeforeEnd:
    """Season high and what was given back by betting to the end."""
    if not curve.points:
        raise EmptyCurveError("peak-before-end needs a non-empty curve")

    values = curve.values
    peak = curve[max(range(len(values)), key=values.__getitem__)]

    return PeakBeforeEnd(peak=peak, forfeited=peak.cumulative - curve.final)
