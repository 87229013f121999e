#pragma once

#include "pupils/frame.hpp"
#include "pupils/options.hpp"
#include "pupils/recording.hpp"
#include "pupils/types.hpp"

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace pupils {

/// Working state handed from stage to stage: the series produced so far and
/// the event spans detected so far.
struct StageData {
    const Recording& recording;
    const PipelineOptions& options;

    std::vector<double> velocity;      // deg/s, NaN where undefined
    std::vector<double> interpolated;  // pupil after gap filling
    std::vector<double> denoised;      // pupil after low-pass

    Spans missing;
    Spans blinks;
    Spans saccades;
    Spans interpolation;  // padded union of missing and blink spans
};

class Stage {
public:
    virtual ~Stage() = default;
    virtual std::string_view name() const = 0;
    virtual void run(StageData& data) const = 0;
};

class BlinkStage final : public Stage {
public:
    std::string_view name() const override { return "blink"; }
    void run(StageData& data) const override;
};

/// Velocity is computed from raw gaze; samples inside missing/blink spans
/// (either endpoint of the window) get NaN velocity before classification.
class SaccadeStage final : public Stage {
public:
    std::string_view name() const override { return "saccade"; }
    void run(StageData& data) const override;
};

class InterpolationStage final : public Stage {
public:
    std::string_view name() const override { return "interpolate"; }
    void run(StageData& data) const override;
};

class SmoothingStage final : public Stage {
public:
    std::string_view name() const override { return "smooth"; }
    void run(StageData& data) const override;
};

struct PipelineResult {
    AnnotatedFrame frame;
    QualityReport report;
};

/**
 * Ordered list of stages. The default pipeline runs blink detection, saccade
 * detection, interpolation and smoothing, in that order; extra stages can be
 * inserted anywhere. Errors raised inside a stage are rethrown with the
 * stage name attached.
 */
class Pipeline {
public:
    Pipeline();  // default stages
    explicit Pipeline(std::vector<std::shared_ptr<const Stage>> stages) : stages_(std::move(stages)) {}

    const std::vector<std::shared_ptr<const Stage>>& stages() const noexcept { return stages_; }

    /// Inserts `stage` before position `index` (clamped to the end).
    void insert(std::size_t index, std::shared_ptr<const Stage> stage);

    PipelineResult run(const Recording& recording, const PipelineOptions& options) const;

private:
    std::vector<std::shared_ptr<const Stage>> stages_;
};

/// Runs the default pipeline on one eye.
PipelineResult process(const Recording& recording, const PipelineOptions& options);

/// Builds the output table from finished stage data.
AnnotatedFrame assemble_frame(const StageData& data);

/// Builds the quality report from finished stage data.
QualityReport assemble_report(const StageData& data);

}  // namespace pupils
