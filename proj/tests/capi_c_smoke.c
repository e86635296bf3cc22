/* Compiled as C11: the public header must work without a C++ compiler. */

#include <stdio.h>
#include <string.h>

#include "rcusp/rcusp.h"

int main(void) {
  rcusp_instance* instance = NULL;
  int64_t lo[2], hi[2];
  int changed = 0;

  if (strcmp(rcusp_status_name(RCUSP_OK), "ok") != 0) return 1;
  if (rcusp_version() == NULL) return 1;

  if (rcusp_instance_from_text("2 2 10\n2 2 0 2 2\n1 1 0 2 4\n", &instance) !=
      RCUSP_OK) {
    fprintf(stderr, "parse failed: %s\n", rcusp_last_error());
    return 1;
  }
  if (rcusp_instance_activity_count(instance) != 2) return 1;
  if (rcusp_instance_initial_bounds(instance, lo, hi) != RCUSP_OK) return 1;
  if (rcusp_propagate(instance, lo, hi, &changed) != RCUSP_OK) return 1;
  if (!changed || lo[1] != 4) return 1;

  rcusp_instance_free(instance);
  printf("ok\n");
  return 0;
}
