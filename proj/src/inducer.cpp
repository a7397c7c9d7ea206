#include "grlbwt/inducer.hpp"

namespace grlbwt {

run_sequence base_bwt(const text_level& final_level) {
    if (final_level.size() != final_level.k) {
        throw error("base_bwt needs one symbol per string, got " + std::to_string(final_level.size()) +
                    " symbols for " + std::to_string(final_level.k) + " strings");
    }
    return run_sequence::encode(final_level.symbols);
}

run_sequence induce_round(const run_sequence& bwt_next, const compressed_dict& cd, const run_sequence& pbwt,
                          induction_stats* stats) {
    run_cursor pbwt_scan(pbwt);
    auto capacity = empty_lengths(pbwt_scan);

    run_cursor first_pass(bwt_next);
    chain_cache chains(cd);
    const bucket_plan plan = size_buckets(first_pass, cd, std::move(capacity), chains);

    run_cursor second_pass(bwt_next);
    run_sequence transformed;
    const induction_buckets buckets = induce(second_pass, cd, plan, chains, transformed);

    run_cursor pbwt_merge(pbwt);
    run_cursor transformed_scan(transformed);
    run_sequence out;
    merge(pbwt_merge, transformed_scan, buckets, cd, plan.occurs, out);
    if (out.total() != pbwt.total()) throw corruption_error("induced BWT length differs from pBWT length");
    if (stats) {
        stats->chain_steps = chains.steps();
        stats->bucket_runs = buckets.run_count();
    }
    return out;
}

}  // namespace grlbwt
