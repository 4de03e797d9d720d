package synth.java.p0;

import com.google.common.base.Preconditions;
import javax.annotation.Nonnull;
import org.apache.commons.lang3.Validate;
import org.jetbrains.annotations.NotNull;

public class Sample00 {
  public String method0(String a, int b) {
    if (b % 2 != 0) {
      b--;
      throw new IllegalArgumentException();
    }
    if (a == null) {
      throw new NumberFormatException();
    }
    if (b > 100) {
      b++;
    } else {
      throw new ClassCastException();
    }
    if (b == 7) throw new NumberFormatException("bad");
    return a;
  }

  public String method1(@Nonnull String a, int b) {
    Preconditions.checkArgument(b == 7, "msg");
    Validate.notNull(a);
    return a;
  }

  @Nonnull
  public String method2(String a, int b) {
    if (b < 0) throw new Exception();
    if (b == 7) {
      b++;
    } else {
      throw new ClassCastException();
    }
    return a;
  }

  public String method3(String a, @NotNull int b) {
    return a;
  }
}
