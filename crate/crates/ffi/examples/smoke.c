/* Links against libvcirc and checks a few known values. */
#include <stdio.h>
#include "vcirc.h"

#define CHECK(cond)                                                   \
  do {                                                                \
    if (!(cond)) {                                                    \
      const char *m = vc_last_error_message();                        \
      fprintf(stderr, "failed: %s (%s)\n", #cond, m ? m : "no error"); \
      return 1;                                                       \
    }                                                                 \
  } while (0)

int main(void) {
  VcField *f = NULL;
  CHECK(vc_field_new(2, 2, &f) == VC_STATUS_OK);
  uint8_t r = 0;
  CHECK(vc_field_mul(f, 2, 3, &r) == VC_STATUS_OK && r == 1);

  const uint8_t lambda[3] = {1, 0, 1}, v[3] = {1, 2, 0};
  uint8_t out[3];
  CHECK(vc_vector_cyclic_shift(f, lambda, v, 3, out) == VC_STATUS_OK);
  CHECK(out[0] == 0 && out[1] == 1 && out[2] == 2);
  vc_field_free(f);

  const uint8_t l8[8] = {1, 0, 0, 0, 0, 0, 0, 2};
  const uint8_t v8[8] = {0, 2, 3, 3, 1, 1, 1, 1};
  VcCode *code = NULL;
  CHECK(vc_code_new(l8, v8, 8, &code) == VC_STATUS_OK);
  size_t d = 0;
  CHECK(vc_code_min_distance(code, &d) == VC_STATUS_OK && d == 4);
  CHECK(vc_code_dimension(code) == 8);
  CHECK(vc_classify(8, 8, d) == VC_CODE_CLASS_NEAR_EXTREMAL);
  vc_code_free(code);

  CHECK(vc_code_new(l8, v8, 8, NULL) == VC_STATUS_NULL_POINTER);
  printf("ok\n");
  return 0;
}
