package synth.java.p2;

import androidx.annotation.NonNull;
import androidx.annotation.Nullable;
import org.apache.commons.lang3.Validate;
import org.springframework.util.Assert;

public class Sample42 {
  @Nullable private String field0 = "";

  public String method0(@NonNull String a, int b) {
    b += 1;
    if (b > 100) {
      b++;
    } else {
      throw new IllegalStateException();
    }
    if (b < 0) throw new RuntimeException();
    Checks.checkArgument(a == null);
    return a;
  }

  public String method1(String a, int b) {
    return a;
  }

  @Deprecated
  public String method2(String a, int b) {
    Validate.isTrue(b > 100);
    assert a == null : "invariant";
    if (b < 0) {
      throw new NumberFormatException();
    }
    Assert.hasText(a, "text");
    b += 1;
    return a;
  }
}
