/* Exercises the shared library through its C header only. */

#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "hbt/hbt.h"

static int failures = 0;

#define EXPECT(cond)                                                \
  do {                                                              \
    if (!(cond)) {                                                  \
      fprintf(stderr, "%s:%d: failed: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                   \
    }                                                               \
  } while (0)

static const char* kSlopeThree =
    "genus 1\n"
    "disk 0 n 3\n"
    "identify 0 offset 0 reversed\n"
    "holes (0,+) (0,-)\n"
    "outer (0,0)-(1,1) (0,1)-(1,0) (0,2)-(1,5) (0,3)-(1,4) (0,4)-(1,3) (0,5)-(1,2)\n"
    "config 0 pairs (0,5)(1,4)(2,3)\n";

int main(void) {
  hbt_presentation* p = NULL;
  hbt_report* r = NULL;
  char* text = NULL;
  int tight = -1;
  uint64_t count = 0;
  hbt_options opts = {0, 2};

  EXPECT(strlen(hbt_version()) > 0);
  EXPECT(hbt_presentation_parse(kSlopeThree, &p) == HBT_OK);
  EXPECT(p != NULL);
  EXPECT(hbt_presentation_genus(p) == 1);
  EXPECT(hbt_presentation_has_config(p) == 1);

  EXPECT(hbt_validate(p, &text) == HBT_OK);
  EXPECT(text && strncmp(text, "valid", 5) == 0);
  hbt_string_free(text);

  EXPECT(hbt_presentation_serialize(p, &text) == HBT_OK);
  {
    hbt_presentation* again = NULL;
    EXPECT(hbt_presentation_parse(text, &again) == HBT_OK);
    char* a = NULL;
    char* b = NULL;
    EXPECT(hbt_presentation_digest(p, &a) == HBT_OK);
    EXPECT(hbt_presentation_digest(again, &b) == HBT_OK);
    EXPECT(a && b && strcmp(a, b) == 0);
    hbt_string_free(a);
    hbt_string_free(b);
    hbt_presentation_free(again);
  }
  hbt_string_free(text);

  EXPECT(hbt_classify(p, &opts, &r) == HBT_OK);
  EXPECT(hbt_report_configurations(r) == 5);
  EXPECT(hbt_report_tight(r) == 3);
  EXPECT(hbt_report_components(r) == 3);
  EXPECT(hbt_report_potentially_allowable(r) == 5);
  EXPECT(hbt_report_transitions(r) > 0);
  EXPECT(hbt_report_component_size(r, 0) == 1);
  EXPECT(hbt_report_component_allowable(r, 0) == 1);
  EXPECT(hbt_report_component_size(r, 99) == -1);
  EXPECT(hbt_report_text(r, &text) == HBT_OK);
  EXPECT(text && strstr(text, "tight: 3") != NULL);
  hbt_string_free(text);
  EXPECT(hbt_report_dot(r, &text) == HBT_OK);
  EXPECT(text && strncmp(text, "digraph", 7) == 0);
  hbt_string_free(text);
  hbt_report_free(r);

  EXPECT(hbt_check(p, NULL, &tight, &text) == HBT_OK);
  EXPECT(tight == 1);
  EXPECT(text && strncmp(text, "TIGHT", 5) == 0);
  hbt_string_free(text);

  opts.config_limit = 3;
  r = NULL;
  EXPECT(hbt_classify(p, &opts, &r) == HBT_ERR_RESOURCE_LIMIT);
  EXPECT(r == NULL);
  EXPECT(strlen(hbt_last_error()) > 0);
  hbt_presentation_free(p);

  p = NULL;
  EXPECT(hbt_presentation_parse("genus 1\nbogus\n", &p) == HBT_ERR_SYNTAX);
  EXPECT(p == NULL);
  EXPECT(strstr(hbt_last_error(), "line 2") != NULL);
  EXPECT(hbt_presentation_parse("genus 1\ndisk 0 n 0\nidentify 0 offset 0 reversed\nholes (0,+) (0,-)\n", &p) ==
         HBT_ERR_SEMANTIC);
  EXPECT(hbt_last_error_cause() == HBT_ERR_EMPTY_INTERSECTION);
  EXPECT(strcmp(hbt_status_name(HBT_ERR_EMPTY_INTERSECTION), "EmptyIntersection") == 0);
  EXPECT(hbt_presentation_parse(NULL, &p) == HBT_ERR_INVALID_ARGUMENT);

  EXPECT(hbt_oracle_solid_torus("-5/2", &count, &text) == HBT_OK);
  EXPECT(count == 4);
  EXPECT(text && strcmp(text, "[-3, -2]") == 0);
  hbt_string_free(text);
  EXPECT(hbt_oracle_solid_torus("5/2", &count, NULL) == HBT_ERR_BAD_SLOPE);
  EXPECT(hbt_oracle_solid_torus("-4/2", &count, NULL) == HBT_ERR_BAD_SLOPE);

  EXPECT(hbt_solid_torus_template("-3", 1, &text) == HBT_OK);
  EXPECT(hbt_presentation_parse(text, &p) == HBT_OK);
  hbt_string_free(text);
  hbt_presentation_free(p);

  EXPECT(hbt_enumerate_text(4, &text) == HBT_OK);
  EXPECT(text && strncmp(text, "n 4 count 14", 12) == 0);
  hbt_string_free(text);
  EXPECT(hbt_enumerate_text(-1, &text) == HBT_ERR_INVALID_ARGUMENT);

  if (failures) fprintf(stderr, "%d failure(s)\n", failures);
  return failures ? 1 : 0;
}
