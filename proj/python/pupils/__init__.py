"""Pupillometry preprocessing: blink and saccade detection, gap interpolation, low-pass denoising."""

from ._core import (
    AnnotatedFrame,
    EventKind,
    EventSpan,
    GazeUnits,
    PipelineOptions,
    PupilsError,
    QualityReport,
    Recording,
    __version__,
    angular_velocity,
    blink_threshold,
    detect_blinks,
    detect_missing,
    detect_saccades,
    interpolate_linear,
    lowpass,
    pad_spans,
    parse_annotated,
    parse_recording,
    process,
    run_cli,
    validate_options,
    visual_angle,
    write_annotated,
    write_report,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
