/* The public header must compile as C and be usable without C++. */
#include <stdio.h>

#include "entspec/entspec.h"

int main(void) {
  entspec_state* state = NULL;
  entspec_sweep* sweep = NULL;
  entspec_stats stats;
  if (entspec_state_w(5, &state) != ENTSPEC_OK) return 1;
  if (entspec_sweep_run(state, 1, 0, &sweep) != ENTSPEC_OK) return 1;
  if (entspec_sweep_stats(sweep, &stats) != ENTSPEC_OK) return 1;
  printf("n_p=%llu mean=%.6f\n", (unsigned long long)stats.count, stats.mean_participation);
  entspec_sweep_free(sweep);
  entspec_state_free(state);
  return stats.count == 10 && stats.mean_participation > 1.923 && stats.mean_participation < 1.924
             ? 0
             : 1;
}
