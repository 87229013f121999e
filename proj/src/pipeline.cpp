#include "pupils/pipeline.hpp"

#include "pupils/blink.hpp"
#include "pupils/error.hpp"
#include "pupils/interpolate.hpp"
#include "pupils/saccade.hpp"
#include "pupils/smooth.hpp"

#include <algorithm>
#include <cmath>

namespace pupils {

namespace {

std::vector<double> as_vector(std::span<const double> s) { return {s.begin(), s.end()}; }

std::vector<double> flags(const Spans& spans, std::size_t n) {
    const auto mask = mask_from_spans(spans, n);
    return {mask.begin(), mask.end()};
}

Spans concat(const Spans& a, const Spans& b) {
    Spans out(a);
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

}  // namespace

void BlinkStage::run(StageData& data) const {
    const auto pupil = data.recording.pupil();
    data.missing = detect_missing(pupil, data.options.fs);
    data.blinks = detect_blinks(pupil, data.options);
}

void SaccadeStage::run(StageData& data) const {
    auto velocity = angular_velocity(data.recording, data.options);
    const auto excluded = mask_from_spans(concat(data.missing, data.blinks), velocity.size());
    const auto w = static_cast<std::size_t>(data.options.velocity_window);
    for (std::size_t i = 0; i < velocity.size(); ++i) {
        if (excluded[i] || (i >= w && excluded[i - w])) velocity[i] = kMissing;
    }
    data.saccades = detect_saccades(velocity, data.options);
    data.velocity = std::move(velocity);
}

void InterpolationStage::run(StageData& data) const {
    const auto n = data.recording.size();
    data.interpolation = pad_spans(concat(data.missing, data.blinks), data.options, n);
    data.interpolated = interpolate_linear(data.recording.pupil(), data.interpolation);
}

void SmoothingStage::run(StageData& data) const {
    const auto& source = data.interpolated.empty() ? as_vector(data.recording.pupil()) : data.interpolated;
    data.denoised = lowpass(source, data.options.fs, data.options.cutoff);
}

Pipeline::Pipeline()
    : stages_{std::make_shared<BlinkStage>(), std::make_shared<SaccadeStage>(), std::make_shared<InterpolationStage>(),
              std::make_shared<SmoothingStage>()} {}

void Pipeline::insert(std::size_t index, std::shared_ptr<const Stage> stage) {
    index = std::min(index, stages_.size());
    stages_.insert(stages_.begin() + static_cast<std::ptrdiff_t>(index), std::move(stage));
}

PipelineResult Pipeline::run(const Recording& recording, const PipelineOptions& raw_options) const {
    const auto options = validate_options(raw_options);
    if (recording.fs() != options.fs)
        throw Error(ErrorKind::InvalidValue, "recording fs does not match options fs");
    recording.check_length(options);

    StageData data{recording, options, {}, {}, {}, {}, {}, {}, {}};
    for (const auto& stage : stages_) {
        try {
            stage->run(data);
        } catch (const Error& e) {
            throw e.with_stage(std::string(stage->name()));
        }
    }

    const auto t = recording.timestamps();
    for (auto* spans : {&data.missing, &data.blinks, &data.saccades, &data.interpolation})
        stamp_spans(*spans, t, options.fs);

    return {assemble_frame(data), assemble_report(data)};
}

PipelineResult process(const Recording& recording, const PipelineOptions& options) {
    static const Pipeline pipeline;
    return pipeline.run(recording, options);
}

AnnotatedFrame assemble_frame(const StageData& data) {
    const auto& rec = data.recording;
    const auto n = rec.size();
    const auto& names = rec.column_names();

    AnnotatedFrame frame;
    frame.columns.push_back({names[0], as_vector(rec.timestamps()), false});
    frame.columns.push_back({names[1], as_vector(rec.gaze_x()), false});
    frame.columns.push_back({names[2], as_vector(rec.gaze_y()), false});
    frame.columns.push_back({names[3], as_vector(rec.pupil()), false});
    if (rec.has_velocity()) {
        frame.columns.push_back({names[4], as_vector(rec.velocity_x()), false});
        frame.columns.push_back({names[5], as_vector(rec.velocity_y()), false});
    } else {
        frame.velocity_computed = true;
        auto velocity = data.velocity.empty() ? std::vector<double>(n, kMissing) : data.velocity;
        frame.columns.push_back({kVelocityColumn, std::move(velocity), false});
    }
    frame.columns.push_back({kBlinkColumn, flags(data.blinks, n), true});
    frame.columns.push_back({kSaccadeColumn, flags(data.saccades, n), true});

    auto interpolated = data.interpolated.empty() ? as_vector(rec.pupil()) : data.interpolated;
    auto denoised = data.denoised.empty() ? interpolated : data.denoised;
    frame.columns.push_back({kInterpolatedColumn, std::move(interpolated), false});
    frame.columns.push_back({kDenoisedColumn, std::move(denoised), false});
    return frame;
}

QualityReport assemble_report(const StageData& data) {
    const auto n = data.recording.size();
    QualityReport report;
    report.blink_spans = data.blinks;
    report.saccade_spans = data.saccades;
    report.n_missing_samples = covered_samples(data.missing, n);
    report.fraction_interpolated = n == 0 ? 0.0 : static_cast<double>(covered_samples(data.interpolation, n)) / n;
    for (double v : data.velocity) {
        if (is_missing(v)) continue;
        if (!report.peak_velocity_deg_s || v > *report.peak_velocity_deg_s) report.peak_velocity_deg_s = v;
    }
    report.parameters_used = data.options;
    return report;
}

}  // namespace pupils
