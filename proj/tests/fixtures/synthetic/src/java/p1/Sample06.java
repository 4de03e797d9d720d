package synth.java.p1;

import androidx.annotation.Nullable;
import javax.annotation.Nonnull;
import org.apache.commons.lang3.Validate;

public class Sample06 {
  protected int field0;
  @Nullable private String field1 = "";
  protected int field2;

  public String method0(String a, int b) {
    return a;
  }

  @SuppressWarnings("unused")
  public String method1(String a, int b) {
    b += 1;
    b += 1;
    Validate.notNull(a);
    Validate.isTrue(b == 7);
    if (b % 2 != 0) {
      b++;
    } else {
      throw new NullPointerException();
    }
    return a;
  }

  @SuppressWarnings("unused")
  public String method2(@Nonnull String a, int b) {
    Validate.isTrue(b > 100);
    if (b > 100) {
      throw new NumberFormatException();
    }
    return a;
  }
}
